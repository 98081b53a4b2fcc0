"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements live in sympy's ``QQ.algebraic_field`` generated by zeta = exp(2 pi i / N),
whose modulus is the N-th cyclotomic polynomial, so the power basis is
1, zeta, ..., zeta^(phi(N)-1). For N <= 2 the field is Q itself and elements are
plain ``QQ`` values (backed by gmpy2 when it is installed).
"""

from __future__ import annotations

import re

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from sympy import I, Poly, Symbol, cyclotomic_poly, exp, pi, totient
from sympy.polys.densearith import dup_rem
from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain

__all__ = [
    "Cyclotomic",
    "Rational",
    "field_domain",
    "field_modulus",
    "is_rational_value",
    "to_rational",
]

Rational = QQ.dtype

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def is_rational_value(value) -> bool:
    return isinstance(value, (int, Rational, Fraction)) and not isinstance(value, bool)


def to_rational(value) -> Rational:
    """Converts an int, Fraction, QQ element or exact string such as "-3/2" to ``QQ``.

    Floats are refused: everything downstream is exact.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if match is None:
            raise ValueError(f"not an exact rational: {value!r}")
        den = int(match.group(2)) if match.group(2) else 1
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {value!r}")
        return QQ(int(match.group(1)), den)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class _FieldData(NamedTuple):
    order: int
    degree: int
    modulus: tuple  # monic, low-to-high, length degree + 1


@lru_cache(maxsize=None)
def field_modulus(order: int) -> _FieldData:
    """Cyclotomic modulus data for Q(zeta_order)."""
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    coeffs = cyclotomic_poly(order, polys=True).all_coeffs()
    modulus = tuple(QQ(int(c)) for c in reversed(coeffs))
    return _FieldData(order, int(totient(order)), modulus)


@lru_cache(maxsize=None)
def field_domain(order: int) -> Domain:
    """The sympy domain of Q(zeta_order): ``QQ`` for order <= 2, else an algebraic field.

    The field is built from the pair (Phi_order, zeta) so that sympy does not have to
    recover the minimal polynomial of zeta numerically.
    """
    data = field_modulus(order)
    if order <= 2:
        return QQ
    x = Symbol("x")
    minpoly = Poly(list(reversed(data.modulus)), x, domain=QQ)
    return QQ.algebraic_field((minpoly, exp(2 * pi * I / order)))


def _reduced(order: int, coeffs: list):
    """Domain element of a low-to-high coefficient vector of any length."""
    domain = field_domain(order)
    if domain is QQ:
        # zeta = 1 or -1
        sign = QQ(-1) if order == 2 else QQ(1)
        acc, power = QQ(0), QQ(1)
        for c in coeffs:
            acc += c * power
            power *= sign
        return acc
    rep = list(reversed(coeffs))
    if len(rep) > field_modulus(order).degree:
        rep = dup_rem(rep, domain.mod.to_list(), QQ)
    return domain.new(rep)


class Cyclotomic:
    """An element of Q(zeta_N) written in the power basis 1, zeta, ..., zeta^(phi(N)-1).

    Instances are immutable and hashable; a rational element hashes like the rational
    itself so that ``Cyclotomic.from_rational(2, N) == 2`` is consistent with hashing.

    Args:
        order: the cyclotomic order N
        coeffs: coefficient vector, low degree first, reduced modulo Phi_N on
            construction
    """

    __slots__ = ("order", "value")

    def __init__(self, order: int, coeffs: Iterable = ()):
        value = _reduced(order, [to_rational(c) for c in coeffs])
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "value", value)

    @classmethod
    def from_domain(cls, value, order: int) -> "Cyclotomic":
        """Wraps an element of ``field_domain(order)`` without copying it."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "value", value)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    def __reduce__(self):
        return (Cyclotomic, (self.order, self.coeffs))

    # constructors

    @classmethod
    def from_rational(cls, value, order: int) -> "Cyclotomic":
        return cls.from_domain(field_domain(order).convert(to_rational(value), QQ), order)

    @classmethod
    def zero(cls, order: int) -> "Cyclotomic":
        return cls.from_domain(field_domain(order).zero, order)

    @classmethod
    def one(cls, order: int) -> "Cyclotomic":
        return cls.from_domain(field_domain(order).one, order)

    @classmethod
    def root_of_unity(cls, order: int, exponent: int = 1) -> "Cyclotomic":
        """Returns zeta^exponent for zeta = exp(2 pi i / order)."""
        domain = field_domain(order)
        e = exponent % order
        if domain is QQ:
            return cls.from_domain(QQ(-1) ** e if order == 2 else QQ(1), order)
        return cls.from_domain(domain.unit**e, order)

    @classmethod
    def zeta(cls, order: int, k: int) -> "Cyclotomic":
        """The k-th root zeta_k := zeta^(k-1), 1 <= k <= order."""
        if not 1 <= k <= order:
            raise IndexError(f"zeta index {k} outside 1..{order}")
        return cls.root_of_unity(order, k - 1)

    # queries

    @property
    def domain(self) -> Domain:
        return field_domain(self.order)

    @property
    def degree(self) -> int:
        return field_modulus(self.order).degree

    @property
    def coeffs(self) -> tuple:
        """Power-basis coordinates, low degree first, padded to the field degree."""
        if self.domain is QQ:
            return (self.value,)
        rep = self.value.to_list()[::-1]
        return tuple(rep) + (QQ(0),) * (self.degree - len(rep))

    def to_domain(self):
        return self.value

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_rational(self) -> bool:
        if self.domain is QQ:
            return True
        return len(self.value.to_list()) <= 1

    def to_rational(self) -> Rational:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        if self.domain is QQ:
            return self.value
        rep = self.value.to_list()
        return rep[0] if rep else QQ(0)

    # arithmetic

    def _coerce(self, other) -> "Cyclotomic":
        if type(other) is Cyclotomic:
            if other.order != self.order:
                raise ValueError(
                    f"cannot combine elements of Q(zeta_{self.order}) and Q(zeta_{other.order})"
                )
            return other
        if is_rational_value(other):
            return Cyclotomic.from_rational(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic.from_domain(self.value + other.value, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic.from_domain(-self.value, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic.from_domain(self.value - other.value, self.order)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclotomic.from_domain(self.value * other.value, self.order)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self.value:
            raise ZeroDivisionError(f"division by zero in Q(zeta_{self.order})")
        return Cyclotomic.from_domain(self.domain.one / self.value, self.order)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        return Cyclotomic.from_domain(base.value ** abs(exponent), self.order)

    # comparison

    def __eq__(self, other) -> bool:
        if type(other) is Cyclotomic:
            return self.order == other.order and self.value == other.value
        if is_rational_value(other):
            return self.is_rational() and self.to_rational() == to_rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.to_rational())
        return hash((self.order, self.coeffs))

    # serialization

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Cyclotomic":
        order = int(data["order"])
        coeffs = [to_rational(c) for c in data["coeffs"]]
        if len(coeffs) != field_modulus(order).degree:
            raise ValueError(
                f"expected {field_modulus(order).degree} coefficients for order {order}, "
                f"got {len(coeffs)}"
            )
        return cls(order, coeffs)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {self})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.to_rational())
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            power = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not power:
                parts.append(str(c))
            elif c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"({c})*{power}")
        return " + ".join(parts).replace("+ -", "- ")
