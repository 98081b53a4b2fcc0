"""The seminormal basis e_st = E_s m_st E_t and the checks of its structure."""

from __future__ import annotations

import random

from dataclasses import dataclass

from yokonuma.cellular import CellularBasis, cellular_basis
from yokonuma.combi import RDTableau, standard_tableaux
from yokonuma.fields import Cyclotomic, EchelonBasis
from yokonuma.kernel import AlgebraContext, Element
from yokonuma.kernel.relations import identity_check
from yokonuma.semisimple.criterion import criterion_check, require_semisimple
from yokonuma.semisimple.idempotents import (
    all_standard_tableaux,
    eigenvalues,
    idempotent_interpolation,
    inductive_checks,
)
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)


@dataclass
class SeminormalDatum:
    """Idempotents, seminormal basis and the scalars gamma_t of one context.

    ``gamma[t]`` is None when e_tt e_tt is not a multiple of e_tt.
    """

    context: AlgebraContext
    idempotents: dict[RDTableau, Element]
    units: dict[tuple[RDTableau, RDTableau], Element]
    gamma: dict[RDTableau, Cyclotomic | None]

    def __len__(self) -> int:
        return len(self.units)


def extract_gamma(x: Element) -> Cyclotomic | None:
    """The scalar g with x x = g x, or None when there is none."""
    if not x:
        return None
    square = x * x
    word, c = x.items()[0]
    gamma = square.coefficient(word) / c
    return gamma if square == x.scale(gamma) else None


def seminormal_basis(
    context: AlgebraContext,
    basis: CellularBasis | None = None,
    max_dimension: int | None = None,
) -> SeminormalDatum:
    require_semisimple(context)
    basis = basis or cellular_basis(context, max_dimension)
    idempotents = {
        t: idempotent_interpolation(context, t)
        for t in all_standard_tableaux(context.r, context.d, context.n)
    }
    units = {
        (e.s, e.t): idempotents[e.s] * e.value * idempotents[e.t] for e in basis.elements
    }
    gamma = {t: extract_gamma(units[(t, t)]) for t in idempotents}
    log.info(f"Seminormal basis of {context}: {len(units)} elements, {len(idempotents)} idempotents")
    return SeminormalDatum(context, idempotents, units, gamma)


def _pairs(items: list, limit: int | None, rng: random.Random) -> list:
    pairs = [(a, b) for a in items for b in items]
    if limit is None or len(pairs) <= limit:
        return pairs
    return rng.sample(pairs, limit)


def jm_subalgebra(context: AlgebraContext) -> tuple[EchelonBasis, list[Element]]:
    """Span of the monomials in X_1..X_n and t_1..t_n, closed under multiplication."""
    generators = [context.X(k) for k in range(1, context.n + 1)]
    generators += [context.t(k) for k in range(1, context.n + 1)]
    echelon = EchelonBasis()
    one = context.one()
    echelon.add(context.vector(one))
    found, queue = [one], [one]
    while queue:
        x = queue.pop()
        for L in generators:
            y = x * L
            if echelon.add(context.vector(y)):
                found.append(y)
                queue.append(y)
    return echelon, found


def centralizer_dimension(context: AlgebraContext) -> int:
    """Dimension of {y : y L = L y} for every X_k and t_k."""
    generators = [context.X(k) for k in range(1, context.n + 1)]
    generators += [context.t(k) for k in range(1, context.n + 1)]
    size = context.dimension
    echelon = EchelonBasis()
    for b in context.basis():
        row: dict[int, Cyclotomic] = {}
        for offset, L in enumerate(generators):
            for j, c in context.vector(b * L - L * b).items():
                row[offset * size + j] = c
        echelon.add(row)
    return size - echelon.rank


def corner_dimension(context: AlgebraContext, idempotent: Element) -> int:
    """Dimension of E A E, spanned by the E b E over the word basis b."""
    echelon = EchelonBasis()
    for b in context.basis():
        echelon.add(context.vector(idempotent * b * idempotent))
    return echelon.rank


def verify_seminormal(
    context: AlgebraContext,
    basis: CellularBasis | None = None,
    probe_pairs: int | None = None,
    centralizer_limit: int = 0,
    primitive_samples: int | None = 4,
    seed: int = 1234,
) -> list[Check]:
    """Basis, structure constants, idempotent resolution of 1, eigen-relations and the
    dimension of the Jucys-Murphy subalgebra.

    Args:
        context: a semisimple context
        basis: cellular basis to reuse
        probe_pairs: products tried per structure family; None tries all
        centralizer_limit: largest dimension for the centraliser computation
        primitive_samples: idempotents E_t whose corner E_t A E_t is checked to be
            one-dimensional; None checks all
        seed: seed of the probe sampling
    """
    checks = [criterion_check(context)]
    if not checks[0].ok:
        return checks
    rng = random.Random(seed)
    datum = seminormal_basis(context, basis)
    E, e, gamma = datum.idempotents, datum.units, datum.gamma
    tableaux = list(E)

    echelon = EchelonBasis()
    echelon.extend(context.vector(x) for x in e.values())
    checks.append(
        Check.of("seminormal_rank", echelon.rank == context.dimension,
                 {"expected": context.dimension}, {"rank": echelon.rank}, axiom="i")
    )

    for t in tableaux:
        g = gamma[t]
        checks.append(
            Check.of("gamma_nonzero", bool(g), {"t": str(t)}, {"gamma": str(g)}, axiom="ii")
        )
        if not g:
            continue
        for s, v in _pairs(list(standard_tableaux(t.shape)), probe_pairs, rng):
            checks.append(
                identity_check("structure_constant", e[(s, t)] * e[(t, v)],
                               e[(s, v)].scale(g), s=str(s), t=str(t), v=str(v))
            )
        checks.append(
            identity_check("idempotent_from_unit", E[t], e[(t, t)] / g, t=str(t))
        )
    keys = list(e)
    for (s, t), (u, v) in _pairs(keys, probe_pairs, rng):
        if t != u:
            checks.append(
                identity_check("orthogonality", e[(s, t)] * e[(u, v)], context.zero(),
                               s=str(s), t=str(t), u=str(u), v=str(v))
            )

    total = context.zero()
    for x in E.values():
        total = total + x
    checks.append(identity_check("resolution_of_identity", total, context.one()))
    for s, t in _pairs(tableaux, probe_pairs, rng):
        expected = E[t] if s == t else context.zero()
        checks.append(identity_check("idempotent_product", E[s] * E[t], expected,
                                     s=str(s), t=str(t)))
    count = len(tableaux)
    nonzero = sum(1 for x in E.values() if x)
    checks.append(
        Check.of("idempotent_count", nonzero == count, {"tableaux": count},
                 {"nonzero": nonzero}, axiom="iii")
    )
    if primitive_samples is None or len(tableaux) <= primitive_samples:
        corners = tableaux
    else:
        corners = rng.sample(tableaux, primitive_samples)
    for t in corners:
        dim = corner_dimension(context, E[t])
        checks.append(
            Check.of("primitive", dim == 1, {"t": str(t)}, {"corner_dimension": dim},
                     axiom="iii")
        )

    for t in tableaux:
        for k in range(1, context.n + 1):
            c, z = eigenvalues(context, t, k)
            for name, L, value in (("X", context.X(k), c), ("t", context.t(k), z)):
                target = E[t].scale(value)
                checks.append(identity_check("eigen_left", L * E[t], target, t=str(t), L=f"{name}{k}"))
                checks.append(identity_check("eigen_right", E[t] * L, target, t=str(t), L=f"{name}{k}"))
                x = e[(t, t)]
                checks.append(
                    identity_check("unit_eigen", x * L, x.scale(value), t=str(t), L=f"{name}{k}")
                )

    jm, _ = jm_subalgebra(context)
    in_span = all(jm.contains(context.vector(x)) for x in E.values())
    idempotent_span = EchelonBasis()
    idempotent_span.extend(context.vector(x) for x in E.values())
    checks.append(
        Check.of("jm_subalgebra_dimension",
                 jm.rank == count == idempotent_span.rank and in_span,
                 {"expected": count},
                 {"rank": jm.rank, "idempotent_rank": idempotent_span.rank,
                  "idempotents_in_span": in_span},
                 axiom="v")
    )
    if context.dimension <= centralizer_limit:
        dim = centralizer_dimension(context)
        checks.append(
            Check.of("centralizer_dimension", dim == count, {"expected": count},
                     {"dimension": dim}, axiom="v")
        )
    else:
        log.warning(f"Skipping the centraliser: dimension {context.dimension} > {centralizer_limit}")
        checks.append(
            Check.skipped("centralizer_dimension",
                          f"dimension {context.dimension} above {centralizer_limit}")
        )

    checks.extend(inductive_checks(context))
    failed = [c for c in checks if not c.ok]
    if failed:
        log.error(f"{len(failed)} seminormal checks failed, first: {failed[0].name}")
    return checks
