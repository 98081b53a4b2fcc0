"""The Murphy-type elements m_lambda and m_st of Y_{r,n}^d.

For an (r,d)-composition lambda of n,

    m_lambda = u_lambda E_(A_lambda) u_a^+ x_lambda,

where u_lambda projects the framing of each nonempty r-component onto its root of
unity, E_(A_lambda) ties the framings inside each r-component together, u_a^+ is the
product of the (X_j - v_l) cutting the d-components apart and x_lambda is the
q-symmetriser of the row group. m_st is g_d(s)^* m_lambda g_d(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from yokonuma.combi import (
    RDPartition,
    RDTableau,
    coset_rep,
    set_partition_of,
    young_subgroup,
)
from yokonuma.kernel import AlgebraContext, Element, framing_projector, set_idempotent
from yokonuma.kernel.relations import identity_check
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)


@dataclass(frozen=True)
class MurphyDatum:
    """The factors of m_lambda for one (r,d)-composition."""

    shape: RDPartition
    u: Element
    E: Element
    u_plus: Element
    x: Element
    m: Element

    @property
    def U(self) -> Element:
        return self.u * self.E


class CellularBasisElement(NamedTuple):
    shape: RDPartition
    s: RDTableau
    t: RDTableau
    value: Element


def _check_shape(context: AlgebraContext, shape: RDPartition) -> None:
    if (shape.r, shape.d) != (context.r, context.d):
        raise ValueError(f"shape {shape} does not match r={context.r}, d={context.d}")
    if shape.size != context.n:
        raise ValueError(f"shape {shape} has size {shape.size}, expected n={context.n}")


def framing_blocks(shape: RDPartition) -> list[tuple[int, range]]:
    """(i_k, I_k) for the nonempty r-components: the root index and the block of entries."""
    out, start = [], 1
    for k, size in enumerate(shape.r_sizes(), start=1):
        if size:
            out.append((k, range(start, start + size)))
            start += size
    return out


def u_lambda(context: AlgebraContext, shape: RDPartition) -> Element:
    """u_(a_1,i_1) ... u_(a_p,i_p) with a_k the last entry of the k-th block."""
    return context.product(
        framing_projector(context, block[-1], k) for k, block in framing_blocks(shape)
    )


def u_plus(context: AlgebraContext, shape: RDPartition) -> Element:
    """prod_k prod_l prod_(j <= a_l^k) (X_(b_k + j) - v_l)."""
    factors = []
    b = 0
    for k in range(1, shape.r + 1):
        a = 0
        for l in range(1, shape.d + 1):
            factors.extend(
                context.X(b + j) - context.constant(context.v[l - 1]) for j in range(1, a + 1)
            )
            a += shape.component(k, l).size
        b += a
    return context.product(factors)


def x_lambda(context: AlgebraContext, shape: RDPartition) -> Element:
    """sum over the row group of q^l(w) g_w."""
    out = context.zero()
    for w in young_subgroup(shape.young_composition()):
        out = out + context.g_w(w).scale(context.q ** w.length())
    return out


def murphy_m_lambda(context: AlgebraContext, shape: RDPartition) -> MurphyDatum:
    _check_shape(context, shape)
    u = u_lambda(context, shape)
    E = set_idempotent(context, set_partition_of(shape))
    plus = u_plus(context, shape)
    x = x_lambda(context, shape)
    m = u * E * plus * x
    log.debug(f"m_lambda for {shape}: {len(m)} terms")
    return MurphyDatum(shape, u, E, plus, x, m)


@lru_cache(maxsize=256)
def _cached_datum(context: AlgebraContext, shape: RDPartition) -> MurphyDatum:
    return murphy_m_lambda(context, shape)


def murphy_m_st(
    context: AlgebraContext, s: RDTableau, t: RDTableau, datum: MurphyDatum | None = None
) -> CellularBasisElement:
    """g_d(s)^* m_lambda g_d(t) for row standard s and t of one shape."""
    if s.shape != t.shape:
        raise ValueError(f"tableaux of different shapes {s.shape} and {t.shape}")
    datum = datum or _cached_datum(context, s.shape)
    ds, dt = coset_rep(s)[0], coset_rep(t)[0]
    value = context.g_w(ds.inverse()) * datum.m * context.g_w(dt)
    return CellularBasisElement(s.shape, s, t, value)


def factorizations(datum: MurphyDatum) -> dict[str, Element]:
    """The five orderings of the factors of m_lambda."""
    u, E, plus, x = datum.u, datum.E, datum.u_plus, datum.x
    return {
        "U u+ x": datum.m,
        "u E x u+": u * E * x * plus,
        "u x E u+": u * x * E * plus,
        "x u E u+": x * u * E * plus,
        "x u+ u E": x * plus * u * E,
    }


def _block_simple_reflections(sizes: list[int]) -> list[int]:
    out, start = [], 1
    for size in sizes:
        out.extend(range(start, start + size - 1))
        start += size
    return out


def murphy_checks(context: AlgebraContext, shape: RDPartition) -> list[Check]:
    """Identities of the factors of m_lambda, exact in the word basis."""
    datum = _cached_datum(context, shape)
    label = str(shape)
    U, m = datum.U, datum.m
    checks = []

    forms = factorizations(datum)
    for name, value in forms.items():
        checks.append(identity_check("factorization", value, m, shape=label, form=name))
    checks.append(identity_check("star_m_lambda", m.star(), m, shape=label))

    blocks = framing_blocks(shape)
    for k, block in blocks:
        for i in block:
            checks.append(
                identity_check("t_eigen_U", context.t(i) * U, U.scale(context.zeta(k)),
                               shape=label, i=i)
            )
    for (_, first), (_, second) in combinations(blocks, 2):
        for i in first:
            for j in second:
                checks.append(
                    identity_check("U_e_vanish", U * context.e(i, j), context.zero(),
                                   shape=label, i=i, j=j)
                )

    sizes = [c.size for c in shape.flattened()]
    for i in _block_simple_reflections(sizes):
        g = context.g(i)
        checks.append(identity_check("young_commute_U", g * U, U * g, shape=label, i=i))
        checks.append(
            identity_check("young_commute_u_plus", g * datum.u_plus, datum.u_plus * g,
                           shape=label, i=i)
        )

    for w in young_subgroup(shape.young_composition()):
        checks.append(
            identity_check(
                "m_lambda_g_w", m * context.g_w(w), m.scale(context.q ** w.length()),
                shape=label, w=list(w),
            )
        )
    return checks
