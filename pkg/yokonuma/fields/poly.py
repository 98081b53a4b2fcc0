from __future__ import annotations

from typing import Iterable, Sequence

from sympy import cyclotomic_poly
from sympy.polys.densearith import dup_add, dup_div, dup_mul, dup_neg, dup_pow, dup_sub
from sympy.polys.densetools import dup_eval, dup_monic
from sympy.polys.euclidtools import dup_gcd

from yokonuma.fields.cyclotomic import Cyclotomic, field_domain, is_rational_value

__all__ = ["ScalarPoly", "cyclotomic_polynomial", "poly_gcd"]


class ScalarPoly:
    """Dense univariate polynomial with coefficients in Q(zeta_N), low degree first.

    Arithmetic runs on sympy's dense ``dup_*`` routines over ``field_domain(N)``; the
    coefficients are exposed as ``Cyclotomic`` values. The zero polynomial has no
    coefficients and degree -1.

    Args:
        coeffs: coefficients, low to high; rationals are lifted into Q(zeta_order)
        order: cyclotomic order of the coefficient field (taken from the coefficients
            when omitted)
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = next((c.order for c in coeffs if isinstance(c, Cyclotomic)), 1)
        lifted = [
            c if isinstance(c, Cyclotomic) else Cyclotomic.from_rational(c, order)
            for c in coeffs
        ]
        while lifted and not lifted[-1]:
            lifted.pop()
        self.order = order
        self.coeffs = tuple(lifted)

    @classmethod
    def from_dup(cls, rep: Sequence, order: int) -> "ScalarPoly":
        """Wraps a dense high-to-low list over ``field_domain(order)``."""
        return cls([Cyclotomic.from_domain(c, order) for c in reversed(rep)], order)

    def to_dup(self) -> list:
        return [c.to_domain() for c in reversed(self.coeffs)]

    @classmethod
    def constant(cls, c, order: int) -> "ScalarPoly":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int) -> "ScalarPoly":
        return cls([0, 1], order)

    @classmethod
    def linear(cls, root, order: int) -> "ScalarPoly":
        """The monic linear factor (u - root)."""
        root = _lift(root, order)
        return cls([-root, Cyclotomic.one(order)], order)

    @classmethod
    def from_roots(cls, roots: Sequence, order: int) -> "ScalarPoly":
        out = cls.constant(1, order)
        for root in roots:
            out = out * cls.linear(root, order)
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading(self) -> Cyclotomic:
        if not self.coeffs:
            return Cyclotomic.zero(self.order)
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Cyclotomic:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Cyclotomic.zero(self.order)

    def monic(self) -> "ScalarPoly":
        if not self.coeffs:
            return self
        return ScalarPoly.from_dup(dup_monic(self.to_dup(), self.domain), self.order)

    @property
    def domain(self):
        return field_domain(self.order)

    def _coerce(self, other) -> "ScalarPoly":
        if isinstance(other, ScalarPoly):
            if other.order == self.order:
                return other
            if all(c.is_rational() for c in other.coeffs):
                return ScalarPoly([c.to_rational() for c in other.coeffs], self.order)
            raise ValueError(
                f"cannot combine polynomials over Q(zeta_{self.order}) and "
                f"Q(zeta_{other.order})"
            )
        if isinstance(other, Cyclotomic) or is_rational_value(other):
            return ScalarPoly.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        rep = dup_add(self.to_dup(), other.to_dup(), self.domain)
        return ScalarPoly.from_dup(rep, self.order)

    __radd__ = __add__

    def __neg__(self):
        return ScalarPoly.from_dup(dup_neg(self.to_dup(), self.domain), self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        rep = dup_sub(self.to_dup(), other.to_dup(), self.domain)
        return ScalarPoly.from_dup(rep, self.order)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        rep = dup_mul(self.to_dup(), other.to_dup(), self.domain)
        return ScalarPoly.from_dup(rep, self.order)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ScalarPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        rep = dup_pow(self.to_dup(), exponent, self.domain)
        return ScalarPoly.from_dup(rep, self.order)

    def __divmod__(self, other) -> tuple["ScalarPoly", "ScalarPoly"]:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        quot, rem = dup_div(self.to_dup(), other.to_dup(), self.domain)
        return ScalarPoly.from_dup(quot, self.order), ScalarPoly.from_dup(rem, self.order)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divide_linear(self, root) -> tuple["ScalarPoly", Cyclotomic]:
        """Division by (u - root): returns quotient and remainder."""
        root = _lift(root, self.order)
        if not self.coeffs:
            return self, Cyclotomic.zero(self.order)
        quot, rem = divmod(self, ScalarPoly.linear(root, self.order))
        return quot, rem.coefficient(0)

    def multiplicity(self, root) -> int:
        """Order of vanishing at ``root``; the zero polynomial raises."""
        if not self.coeffs:
            raise ValueError("the zero polynomial vanishes to infinite order")
        count, poly = 0, self
        while True:
            quot, rem = poly.divide_linear(root)
            if rem:
                return count
            count, poly = count + 1, quot

    def __call__(self, x) -> Cyclotomic:
        x = _lift(x, self.order)
        value = dup_eval(self.to_dup(), x.to_domain(), self.domain)
        return Cyclotomic.from_domain(value, self.order)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    def __repr__(self) -> str:
        return f"ScalarPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if not mono:
                terms.append(f"({c})")
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(reversed(terms))


def _lift(x, order: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    return Cyclotomic.from_rational(x, order)


def poly_gcd(p: ScalarPoly, q: ScalarPoly) -> ScalarPoly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    q = p._coerce(q)
    return ScalarPoly.from_dup(dup_gcd(p.to_dup(), q.to_dup(), p.domain), p.order)


def cyclotomic_polynomial(order: int) -> ScalarPoly:
    """Phi_order as a polynomial with rational coefficients."""
    if order < 1:
        raise ValueError(f"cyclotomic order must be positive, got {order}")
    coeffs = cyclotomic_poly(order, polys=True).all_coeffs()
    return ScalarPoly([int(c) for c in reversed(coeffs)], order=1)
