"""The semisimplicity criterion on (q, v_1..v_d, n)."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from yokonuma.errors import SemisimplicityError
from yokonuma.fields import Cyclotomic
from yokonuma.kernel import AlgebraContext
from yokonuma.tasks.report import Check


class Factor(NamedTuple):
    label: str
    value: Cyclotomic


def criterion_factors(q: Cyclotomic, v: Sequence[Cyclotomic], n: int) -> list[Factor]:
    """1 + q^2 + ... + q^(2(k-1)) for k = 1..n and q^(2l) v_i - v_j for i < j, |l| < n."""
    out = []
    q2 = q * q
    for k in range(1, n + 1):
        total = Cyclotomic.zero(q.order)
        power = Cyclotomic.one(q.order)
        for _ in range(k):
            total = total + power
            power = power * q2
        out.append(Factor(f"[{k}]_(q^2)", total))
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            for l in range(-n + 1, n):
                out.append(Factor(f"q^{2 * l} v{i + 1} - v{j + 1}", q2 ** l * v[i] - v[j]))
    return out


def vanishing_factors(q: Cyclotomic, v: Sequence[Cyclotomic], n: int) -> list[str]:
    return [f.label for f in criterion_factors(q, v, n) if not f.value]


def semisimplicity_criterion(context: AlgebraContext) -> bool:
    return not vanishing_factors(context.q, context.v, context.n)


def require_semisimple(context: AlgebraContext, n: int | None = None) -> None:
    n = context.n if n is None else n
    vanishing = vanishing_factors(context.q, context.v, n)
    if vanishing:
        raise SemisimplicityError(
            f"{context} at n={n} fails the semisimplicity criterion: {', '.join(vanishing)} vanish"
        )


def criterion_check(context: AlgebraContext) -> Check:
    vanishing = vanishing_factors(context.q, context.v, context.n)
    return Check.of("semisimplicity_criterion", not vanishing, {"n": context.n}, vanishing)
