"""Polynomials and rational functions in one variable u with values in the algebra.

Numerators carry algebra elements, denominators stay scalar, so every cancellation
reduces to scalar polynomial arithmetic on the per-word coefficient polynomials.
"""

from __future__ import annotations

from typing import Sequence

from yokonuma.errors import ConsistencyError, PoleError
from yokonuma.fields import Cyclotomic, ScalarPoly, ScalarRatFun, is_rational_value, poly_gcd
from yokonuma.kernel import AlgebraContext, Element, Word


def _is_scalar(x) -> bool:
    return isinstance(x, Cyclotomic) or is_rational_value(x)


class AlgPoly:
    """sum_k coeffs[k] u^k with coefficients in one algebra, low degree first.

    Args:
        context: the algebra of the coefficients
        coeffs: the coefficients; trailing zeros are dropped
    """

    __slots__ = ("context", "coeffs")

    def __init__(self, context: AlgebraContext, coeffs: Sequence[Element] = ()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.context = context
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, x: Element) -> "AlgPoly":
        return cls(x.context, [x])

    @classmethod
    def from_scalar(cls, poly: ScalarPoly, x: Element) -> "AlgPoly":
        """poly(u) x."""
        return cls(x.context, [x.scale(c) for c in poly.coeffs])

    @classmethod
    def from_word_polys(cls, context: AlgebraContext, polys: dict[Word, ScalarPoly]) -> "AlgPoly":
        degree = max((p.degree for p in polys.values()), default=-1)
        return cls(
            context,
            [
                context.element({w: p.coefficient(k) for w, p in polys.items()})
                for k in range(degree + 1)
            ],
        )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coefficient(self, k: int) -> Element:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.context.zero()

    def word_polys(self) -> dict[Word, ScalarPoly]:
        """The coefficient polynomial of every word in the support."""
        order = self.context.order
        zero = Cyclotomic.zero(order)
        words = {w for x in self.coeffs for w in x.terms}
        return {
            w: ScalarPoly([x.terms.get(w, zero) for x in self.coeffs], order) for w in words
        }

    def __add__(self, other):
        if not isinstance(other, AlgPoly):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return AlgPoly(
            self.context, [self.coefficient(k) + other.coefficient(k) for k in range(size)]
        )

    def __neg__(self) -> "AlgPoly":
        return AlgPoly(self.context, [-x for x in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, AlgPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgPoly):
            if not self or not other:
                return AlgPoly(self.context)
            out = [self.context.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return AlgPoly(self.context, out)
        if isinstance(other, Element):
            return AlgPoly(self.context, [x * other for x in self.coeffs])
        if isinstance(other, ScalarPoly):
            if not self or not other:
                return AlgPoly(self.context)
            out = [self.context.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, c in enumerate(other.coeffs):
                    if c:
                        out[i + j] = out[i + j] + a.scale(c)
            return AlgPoly(self.context, out)
        if _is_scalar(other):
            return AlgPoly(self.context, [x.scale(other) for x in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Element):
            return AlgPoly(self.context, [other * x for x in self.coeffs])
        if isinstance(other, ScalarPoly) or _is_scalar(other):
            return self * other
        return NotImplemented

    def __call__(self, x) -> Element:
        x = self.context.scalar(x)
        out = self.context.zero()
        for c in reversed(self.coeffs):
            out = out.scale(x) + c
        return out

    def divide_linear(self, root) -> tuple["AlgPoly", Element]:
        """Synthetic division by (u - root): quotient and remainder."""
        root = self.context.scalar(root)
        if not self.coeffs:
            return self, self.context.zero()
        acc = self.context.zero()
        quot = []
        for c in reversed(self.coeffs):
            acc = acc.scale(root) + c
            quot.append(acc)
        remainder = quot.pop()
        return AlgPoly(self.context, list(reversed(quot))), remainder

    def divide_scalar(self, poly: ScalarPoly) -> "AlgPoly":
        """Exact division by a scalar polynomial."""
        out = {}
        for w, p in self.word_polys().items():
            quot, rem = divmod(p, poly)
            if rem:
                raise ConsistencyError(f"{poly} does not divide the coefficient of {w}")
            out[w] = quot
        return AlgPoly.from_word_polys(self.context, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"AlgPoly(degree={self.degree})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, x in enumerate(self.coeffs):
            if x:
                mono = "" if k == 0 else ("*u" if k == 1 else f"*u^{k}")
                parts.append(f"({x}){mono}")
        return " + ".join(reversed(parts))


class AlgRatFun:
    """num(u)/den(u) with num an ``AlgPoly`` and den a scalar polynomial.

    The constructor cancels every scalar factor common to den and all coefficients of
    num, and makes den monic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: AlgPoly, den: ScalarPoly | None = None):
        order = num.context.order
        if den is None:
            den = ScalarPoly.constant(1, order)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if den.degree > 0 and num:
            g = den
            for p in num.word_polys().values():
                g = poly_gcd(g, p)
                if g.degree == 0:
                    break
            if g.degree > 0:
                num, den = num.divide_scalar(g), den // g
        elif not num:
            den = ScalarPoly.constant(1, order)
        lead = den.leading
        if lead != 1:
            inv = lead.inverse()
            num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, x: Element) -> "AlgRatFun":
        return cls(AlgPoly.constant(x))

    @property
    def context(self) -> AlgebraContext:
        return self.num.context

    def _coerce(self, other) -> "AlgRatFun":
        if isinstance(other, AlgRatFun):
            return other
        if isinstance(other, AlgPoly):
            return AlgRatFun(other)
        if isinstance(other, Element):
            return AlgRatFun.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgRatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "AlgRatFun":
        return AlgRatFun(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ScalarRatFun):
            return AlgRatFun(self.num * other.num, self.den * other.den)
        if isinstance(other, ScalarPoly) or _is_scalar(other):
            return AlgRatFun(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgRatFun(self.num * other.num, self.den * other.den)

    def __rmul__(self, other):
        if isinstance(other, Element):
            return AlgRatFun(other * self.num, self.den)
        if isinstance(other, (ScalarRatFun, ScalarPoly)) or _is_scalar(other):
            return self * other
        return NotImplemented

    def __call__(self, x) -> Element:
        return evaluate_with_cancellation(self, x)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"AlgRatFun(degree {self.num.degree} / ({self.den}))"


def evaluate_with_cancellation(f: AlgRatFun, x, step: int | None = None) -> Element:
    """f(x) after dividing (u - x)^m out of den and, exactly, out of num.

    Raises ``PoleError`` when num is divisible by fewer factors than den holds.
    """
    x = f.context.scalar(x)
    num, den = f.num, f.den
    multiplicity = den.multiplicity(x)
    cancelled = 0
    while cancelled < multiplicity:
        quot, rem = num.divide_linear(x)
        if rem:
            raise PoleError(x, multiplicity, cancelled, step)
        num = quot
        cancelled += 1
    for _ in range(multiplicity):
        den = den.divide_linear(x)[0]
    return num(x) / den(x)


def variable(context: AlgebraContext) -> ScalarPoly:
    """The formal variable u over the scalars of ``context``."""
    return ScalarPoly.variable(context.order)


def resolvent(context: AlgebraContext, poly: ScalarPoly, y: Element) -> AlgPoly:
    """(poly(u) - poly(y)) / (u - y) for a commuting element y, expanded as
    sum_j a_j sum_(m < j) u^m y^(j-1-m)."""
    powers = [context.one()]
    for _ in range(max(poly.degree - 1, 0)):
        powers.append(powers[-1] * y)
    coeffs = []
    for m in range(poly.degree):
        out = context.zero()
        for j in range(m + 1, poly.degree + 1):
            out = out + powers[j - 1 - m].scale(poly.coefficient(j))
        coeffs.append(out)
    return AlgPoly(context, coeffs)
