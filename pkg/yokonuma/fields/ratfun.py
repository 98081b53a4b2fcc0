from __future__ import annotations

from yokonuma.errors import PoleError
from yokonuma.fields.cyclotomic import Cyclotomic, is_rational_value
from yokonuma.fields.poly import ScalarPoly, poly_gcd

__all__ = ["ScalarRatFun", "ratfun_eval", "ratfun_normalize"]


class ScalarRatFun:
    """A rational function num/den in one variable over Q(zeta_N).

    The constructor normalizes: common factors are cancelled and the denominator is
    made monic, so equal functions have equal representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ScalarPoly, den: ScalarPoly | None = None):
        if den is None:
            den = ScalarPoly.constant(1, num.order)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = poly_gcd(num, den) if num else den.monic()
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading
        if lead != 1:
            inv = lead.inverse()
            num, den = num * inv, den * inv
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, c, order: int) -> "ScalarRatFun":
        return cls(ScalarPoly.constant(c, order))

    @property
    def order(self) -> int:
        return self.num.order

    def _coerce(self, other) -> "ScalarRatFun":
        if isinstance(other, ScalarRatFun):
            return other
        if isinstance(other, ScalarPoly):
            return ScalarRatFun(other)
        if isinstance(other, Cyclotomic) or is_rational_value(other):
            return ScalarRatFun.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ScalarRatFun(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return ScalarRatFun(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ScalarRatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarRatFun":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return ScalarRatFun(self.den, self.num)

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

    def __call__(self, x) -> Cyclotomic:
        return ratfun_eval(self, x)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"ScalarRatFun(({self.num}) / ({self.den}))"


def ratfun_normalize(num: ScalarPoly, den: ScalarPoly) -> ScalarRatFun:
    return ScalarRatFun(num, den)


def ratfun_eval(f: ScalarRatFun, x) -> Cyclotomic:
    """Evaluates a normalized rational function; a vanishing denominator is a pole."""
    if not isinstance(x, Cyclotomic):
        x = Cyclotomic.from_rational(x, f.order)
    den = f.den(x)
    if not den:
        raise PoleError(x, f.den.multiplicity(x))
    return f.num(x) / den
