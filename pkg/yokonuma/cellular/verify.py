"""Cellular axioms, the Jucys-Murphy property and the lemma-level identities of the
Murphy basis, all decided exactly through the coordinates of ``CellularBasis``."""

from __future__ import annotations

from itertools import combinations

from yokonuma.cellular.basis import CellularBasis, Key, strictly_dominates
from yokonuma.cellular.murphy import murphy_checks, murphy_m_st
from yokonuma.combi import (
    RDPartition,
    RDTableau,
    content_and_position,
    dominates_tableau,
    initial_tableau,
    row_standard_tableaux,
    standard_tableaux,
)
from yokonuma.errors import NoSolutionError
from yokonuma.fields import Cyclotomic
from yokonuma.kernel import AlgebraContext, Element
from yokonuma.kernel.relations import element_witness
from yokonuma.kernel.tower import algebra_generators
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)


def _witness(key: Key, c: Cyclotomic) -> dict:
    shape, u, v = key
    return {"shape": str(shape), "u": str(u), "v": str(v), "coeff": str(c)}


def verify_cellularity(basis: CellularBasis) -> list[Check]:
    """(C1) cardinality and independence, (C2) star symmetry, (C3) the right action of
    the generators with s-independent coefficients modulo the higher shapes."""
    context = basis.context
    checks = []

    try:
        basis.inverse()
        independent = True
    except NoSolutionError:
        independent = False
    checks.append(
        Check.of("cardinality", len(basis) == context.dimension,
                 {"expected": context.dimension}, {"count": len(basis)}, axiom="C1")
    )
    checks.append(Check.of("independence", independent, {"count": len(basis)}, axiom="C1"))
    if not independent:
        return checks

    bad_star = []
    for e in basis.elements:
        if e.value.star() != basis[(e.t, e.s)]:
            bad_star.append({"shape": str(e.shape), "s": str(e.s), "t": str(e.t)})
    checks.append(Check.of("star_symmetry", not bad_star, {"pairs": len(basis)}, bad_star, axiom="C2"))

    generators = algebra_generators(context)
    for shape in basis.shapes:
        tableaux = standard_tableaux(shape)
        for t in tableaux:
            for name, a in generators:
                checks.append(_right_action_check(basis, shape, tableaux, t, name, a))
    return checks


def _right_action_check(
    basis: CellularBasis,
    shape: RDPartition,
    tableaux: tuple[RDTableau, ...],
    t: RDTableau,
    name: str,
    a: Element,
) -> Check:
    reference: dict | None = None
    reference_s = None
    for s in tableaux:
        inside, outside = {}, []
        for key, c in basis.expand(basis[(s, t)] * a).items():
            mu, u, v = key
            if mu == shape and u == s:
                inside[v] = c
            elif not strictly_dominates(mu, shape):
                outside.append(_witness(key, c))
        instance = {"shape": str(shape), "s": str(s), "t": str(t), "a": name}
        if outside:
            return Check.of("right_action", False, instance, {"not_above": outside}, axiom="C3")
        if reference is None:
            reference, reference_s = inside, s
        elif inside != reference:
            return Check.of(
                "right_action", False, instance,
                {
                    "reference_s": str(reference_s),
                    "reference": {str(v): str(c) for v, c in reference.items()},
                    "found": {str(v): str(c) for v, c in inside.items()},
                },
                axiom="C3",
            )
    return Check.of("right_action", True, {"shape": str(shape), "t": str(t), "a": name}, axiom="C3")


def jm_eigenvalue(context: AlgebraContext, t: RDTableau, kind: str, k: int) -> Cyclotomic:
    """c_t(k) for X_k and zeta_(p_t(k)) for t_k."""
    content, position = content_and_position(t, k, context.q, context.v)
    return content if kind == "X" else context.zeta(position)


def verify_jm(basis: CellularBasis) -> list[Check]:
    """m_(t^lambda t) L = C_t m_(t^lambda t) + higher tableaux, modulo higher shapes."""
    context = basis.context
    checks = []
    for shape in basis.shapes:
        top = initial_tableau(shape)
        for t in standard_tableaux(shape):
            x = basis[(top, t)]
            for kind in ("X", "t"):
                for k in range(1, context.n + 1):
                    L = context.X(k) if kind == "X" else context.t(k)
                    expected = jm_eigenvalue(context, t, kind, k)
                    diagonal = Cyclotomic.zero(context.order)
                    bad = []
                    for key, c in basis.expand(x * L).items():
                        mu, u, v = key
                        if mu == shape and u == top:
                            if v == t:
                                diagonal = c
                            elif not dominates_tableau(v, t):
                                bad.append(_witness(key, c))
                        elif not strictly_dominates(mu, shape):
                            bad.append(_witness(key, c))
                    ok = not bad and diagonal == expected
                    checks.append(
                        Check.of(
                            "jm_triangular", ok,
                            {"shape": str(shape), "t": str(t), "L": f"{kind}{k}"},
                            {"expected": str(expected), "diagonal": str(diagonal), "off": bad},
                        )
                    )
    return checks


def annihilation_checks(basis: CellularBasis) -> list[Check]:
    """m_st e_(i,j) = 0 whenever i and j sit in different r-components of t."""
    context = basis.context
    checks = []
    for shape in basis.shapes:
        top = initial_tableau(shape)
        for t in standard_tableaux(shape):
            x = basis[(top, t)]
            bad = []
            for i, j in combinations(range(1, context.n + 1), 2):
                if t.node(i).k != t.node(j).k:
                    y = x * context.e(i, j)
                    if y:
                        bad.append({"i": i, "j": j, "product": element_witness(y)})
            checks.append(Check.of("m_e_vanish", not bad, {"shape": str(shape), "t": str(t)}, bad))
    return checks


def row_standard_expansion(basis: CellularBasis, limit: int | None = None) -> list[Check]:
    """Every row standard m_st is a combination of m_uv with u above s and v above t."""
    context = basis.context
    checks = []
    count = 0
    for shape in basis.shapes:
        tableaux = row_standard_tableaux(shape)
        for s in tableaux:
            for t in tableaux:
                if s.is_standard() and t.is_standard():
                    continue
                if limit is not None and count >= limit:
                    checks.append(
                        Check.skipped("row_standard_expansion", f"limit of {limit} pairs reached")
                    )
                    return checks
                count += 1
                x = murphy_m_st(context, s, t).value
                bad = [
                    _witness(key, c)
                    for key, c in basis.expand(x).items()
                    if not (dominates_tableau(key[1], s) and dominates_tableau(key[2], t))
                ]
                checks.append(
                    Check.of("row_standard_expansion", not bad,
                             {"shape": str(shape), "s": str(s), "t": str(t)}, bad)
                )
    return checks


def lemma_checks(basis: CellularBasis) -> list[Check]:
    """The factor identities of every m_lambda."""
    out = []
    for shape in basis.shapes:
        out.extend(murphy_checks(basis.context, shape))
    return out
