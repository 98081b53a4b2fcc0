"""Baxterized generators g_i(a, b) = g_i + (q - q^-1) b e_i / (a - b)."""

from __future__ import annotations

import random

from fractions import Fraction
from typing import Union

from yokonuma.errors import PoleError
from yokonuma.fields import Cyclotomic, ScalarPoly
from yokonuma.fusion.algfun import AlgPoly, AlgRatFun, variable
from yokonuma.kernel import AlgebraContext, Element
from yokonuma.kernel.relations import identity_check
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)

Spectral = Union[Cyclotomic, Fraction, int, ScalarPoly]


def _as_poly(context: AlgebraContext, x: Spectral) -> ScalarPoly:
    if isinstance(x, ScalarPoly):
        if x.degree > 1:
            raise ValueError(f"spectral parameter {x} is not affine in u")
        return x
    return ScalarPoly.constant(context.scalar(x), context.order)


def baxterized_g(context: AlgebraContext, i: int, a: Spectral, b: Spectral) -> AlgRatFun:
    """g_i(a, b) as a rational function of u; a and b are scalars or affine in u.

    Two equal numeric parameters are a pole.
    """
    pa, pb = _as_poly(context, a), _as_poly(context, b)
    den = pa - pb
    if not den:
        raise PoleError(str(a), 1)
    g, e = context.g(i), context.e(i)
    num = AlgPoly.from_scalar(den, g) + AlgPoly.from_scalar(pb, e.scale(context.qdiff))
    return AlgRatFun(num, den)


def baxterized_value(context: AlgebraContext, i: int, a, b) -> Element:
    """g_i(a, b) at numeric a != b."""
    a, b = context.scalar(a), context.scalar(b)
    if a == b:
        raise PoleError(a, 1)
    return context.g(i) + context.e(i).scale(context.qdiff * b / (a - b))


def unitarity_rhs(context: AlgebraContext, i: int, a, b) -> Element:
    """1 - (q - q^-1)^2 a b e_i / (a - b)^2."""
    a, b = context.scalar(a), context.scalar(b)
    return context.one() - context.e(i).scale(context.qdiff ** 2 * a * b / (a - b) ** 2)


def sample_points(context: AlgebraContext, count: int, rng: random.Random) -> list[Cyclotomic]:
    """Distinct nonzero rational points avoiding the v_i."""
    seen = set(context.v)
    out = []
    while len(out) < count:
        x = context.scalar(Fraction(rng.randint(-40, 40), rng.randint(1, 7)))
        if x and x not in seen:
            seen.add(x)
            out.append(x)
    return out


def unitarity_checks(context: AlgebraContext, points: int = 5, seed: int = 1234) -> list[Check]:
    """g_i(a,b) g_i(b,a) = 1 - (q - q^-1)^2 ab e_i/(a - b)^2 at sample pairs, and as an
    identity of rational functions in u for b = u."""
    rng = random.Random(seed)
    checks = []
    for i in range(1, context.n):
        values = sample_points(context, 2 * points, rng)
        for a, b in zip(values[::2], values[1::2]):
            lhs = baxterized_value(context, i, a, b) * baxterized_value(context, i, b, a)
            checks.append(
                identity_check("unitarity", lhs, unitarity_rhs(context, i, a, b),
                               i=i, a=str(a), b=str(b))
            )
        u = variable(context)
        for b in values[:points]:
            lhs = baxterized_g(context, i, u, b) * baxterized_g(context, i, b, u)
            diff = ScalarPoly.linear(b, context.order)
            rhs = AlgRatFun(
                AlgPoly.from_scalar(diff * diff, context.one())
                - AlgPoly.from_scalar(u * b, context.e(i).scale(context.qdiff ** 2)),
                diff * diff,
            )
            checks.append(Check.of("unitarity_symbolic", lhs == rhs, {"i": i, "b": str(b)},
                                   {"lhs_den": str(lhs.den), "rhs_den": str(rhs.den)}))
    return checks


def yang_baxter_checks(context: AlgebraContext, points: int = 5, seed: int = 1234) -> list[Check]:
    """g_i(a,b) g_(i+1)(a,c) g_i(b,c) = g_(i+1)(b,c) g_i(a,c) g_(i+1)(a,b) at sample
    triples of pairwise distinct points."""
    rng = random.Random(seed)
    checks = []

    def G(j, x, y):
        return baxterized_value(context, j, x, y)

    for i in range(1, context.n - 1):
        values = sample_points(context, 3 * points, rng)
        for a, b, c in zip(values[::3], values[1::3], values[2::3]):
            lhs = G(i, a, b) * G(i + 1, a, c) * G(i, b, c)
            rhs = G(i + 1, b, c) * G(i, a, c) * G(i + 1, a, b)
            checks.append(
                identity_check("yang_baxter", lhs, rhs, i=i, a=str(a), b=str(b), c=str(c))
            )
    if not checks:
        checks.append(Check.skipped("yang_baxter", "needs n >= 3"))
    return checks
