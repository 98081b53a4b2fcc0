"""Primitive idempotents E_t from the Jucys-Murphy eigenvalues.

``idempotent_interpolation`` is the Lagrange-type product over the global content
sets; ``idempotent_inductive`` builds the same element one box at a time from the
addable nodes of the previous shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from yokonuma.combi import (
    RDTableau,
    addable_removable,
    content_and_position,
    enumerate_rd_partitions,
    standard_tableaux,
)
from yokonuma.fields import Cyclotomic
from yokonuma.kernel import AlgebraContext, Element
from yokonuma.kernel.relations import identity_check
from yokonuma.semisimple.criterion import require_semisimple
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)


@dataclass(frozen=True)
class ContentTables:
    """For k = 1..n the sets C(k) of contents and Cbar(k) of framing roots met at k by
    some standard tableau of some shape of size n."""

    contents: tuple[tuple[Cyclotomic, ...], ...]
    roots: tuple[tuple[Cyclotomic, ...], ...]

    def content_set(self, k: int) -> tuple[Cyclotomic, ...]:
        return self.contents[k - 1]

    def root_set(self, k: int) -> tuple[Cyclotomic, ...]:
        return self.roots[k - 1]


def all_standard_tableaux(r: int, d: int, n: int) -> list[RDTableau]:
    return [t for shape in enumerate_rd_partitions(r, d, n) for t in standard_tableaux(shape)]


@lru_cache(maxsize=32)
def content_tables(context: AlgebraContext, n: int | None = None) -> ContentTables:
    n = context.n if n is None else n
    contents = [dict() for _ in range(n)]
    roots = [dict() for _ in range(n)]
    for t in all_standard_tableaux(context.r, context.d, n):
        for k in range(1, n + 1):
            c, p = content_and_position(t, k, context.q, context.v)
            contents[k - 1][c] = None
            roots[k - 1][context.zeta(p)] = None
    return ContentTables(
        tuple(tuple(c) for c in contents), tuple(tuple(z) for z in roots)
    )


def eigenvalues(context: AlgebraContext, t: RDTableau, k: int) -> tuple[Cyclotomic, Cyclotomic]:
    """(c_t(k), zeta_(p_t(k)))."""
    c, p = content_and_position(t, k, context.q, context.v)
    return c, context.zeta(p)


def _check_size(context: AlgebraContext, t: RDTableau) -> None:
    if t.size > context.n:
        raise ValueError(f"tableau of size {t.size} does not fit in {context}")
    if not t.is_standard():
        raise ValueError(f"{t} is not standard")


def idempotent_interpolation(context: AlgebraContext, t: RDTableau) -> Element:
    """E_t = prod_k prod_(c in C(k), c != c_t(k)) (X_k - c)/(c_t(k) - c)
    * prod_(z in Cbar(k), z != zeta_(p_t(k))) (t_k - z)/(zeta_(p_t(k)) - z).

    For a tableau smaller than the context the content sets are those of size |t| and
    the result lies in the embedded subalgebra.
    """
    _check_size(context, t)
    require_semisimple(context, t.size)
    tables = content_tables(context, t.size)
    out = context.one()
    for k in range(1, t.size + 1):
        c_k, z_k = eigenvalues(context, t, k)
        X, T = context.X(k), context.t(k)
        for c in tables.content_set(k):
            if c != c_k:
                out = out * ((X - c) / (c_k - c))
        for z in tables.root_set(k):
            if z != z_k:
                out = out * ((T - z) / (z_k - z))
    return out


@lru_cache(maxsize=4096)
def idempotent_inductive(context: AlgebraContext, t: RDTableau) -> Element:
    """E_t = E_u prod_(a addable to mu, c(a) != c(theta)) (X_n - c(a))/(c(theta) - c(a))
    * prod_(a addable to mu, p(a) != p(theta)) (t_n - zeta_p(a))/(zeta_p(theta) - zeta_p(a)),
    where u = t without n, mu its shape and theta the node of n."""
    _check_size(context, t)
    if t.size == 0:
        return context.one()
    require_semisimple(context, t.size)
    n = t.size
    u = t.remove_last()
    out = idempotent_inductive(context, u)
    c_n, z_n = eigenvalues(context, t, n)
    X, T = context.X(n), context.t(n)
    for node in addable_removable(u.shape)[0]:
        c = context.v[node.l - 1] * context.q ** (2 * node.classical_content)
        z = context.zeta(node.k)
        if c != c_n:
            out = out * ((X - c) / (c_n - c))
        if z != z_n:
            out = out * ((T - z) / (z_n - z))
    return out


def extensions(u: RDTableau) -> list[RDTableau]:
    """The standard tableaux obtained from u by placing |u|+1 in an addable node."""
    return [u.add(node) for node in addable_removable(u.shape)[0]]


def position_projector(context: AlgebraContext, k: int, p: int) -> Element:
    """(1/r) sum_s zeta_p^(-s) t_k^s, the projector onto t_k = zeta_p."""
    z = context.zeta(p).inverse()
    out = context.zero()
    for s in range(context.r):
        out = out + context.t(k, s).scale(z ** s)
    return out / context.r


def sum_formula_checks(context: AlgebraContext, u: RDTableau) -> list[Check]:
    """E_u = sum E_t over the extensions t of u, and E_(u,p) = sum of those whose new
    node sits in r-position p."""
    n = u.size + 1
    if n > context.n:
        raise ValueError(f"extensions of {u} do not fit in {context}")
    E_u = idempotent_interpolation(context, u)
    parts = {t: idempotent_interpolation(context, t) for t in extensions(u)}
    total = context.zero()
    for x in parts.values():
        total = total + x
    checks = [identity_check("sum_formula", total, E_u, u=str(u))]
    for p in range(1, context.r + 1):
        refined = position_projector(context, n, p) * E_u
        expected = context.zero()
        for t, x in parts.items():
            if t.node(n).k == p:
                expected = expected + x
        checks.append(identity_check("sum_formula_position", refined, expected, u=str(u), p=p))
    return checks


def inductive_checks(context: AlgebraContext) -> list[Check]:
    """Interpolation and inductive formulas agree on every standard tableau of size n."""
    checks = []
    for t in all_standard_tableaux(context.r, context.d, context.n):
        checks.append(
            identity_check("interpolation_inductive", idempotent_interpolation(context, t),
                           idempotent_inductive(context, t), t=str(t))
        )
    log.info(f"Compared interpolation and inductive idempotents on {len(checks)} tableaux")
    return checks
