"""The cellular basis {m_st : s, t standard of one (r,d)-partition} and its coordinates."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from yokonuma.combi import (
    RDPartition,
    RDTableau,
    coset_rep,
    dominates,
    enumerate_rd_partitions,
    initial_tableau,
    standard_tableaux,
)
from yokonuma.errors import NoSolutionError, SizeLimitError
from yokonuma.fields import Cyclotomic, EchelonBasis, ExactMatrix
from yokonuma.kernel import AlgebraContext, Element
from yokonuma.cellular.murphy import CellularBasisElement, murphy_m_lambda, murphy_m_st
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)

Key = tuple[RDPartition, RDTableau, RDTableau]


@lru_cache(maxsize=None)
def strictly_dominates(mu: RDPartition, lam: RDPartition) -> bool:
    return mu != lam and dominates(mu, lam)


class CellularBasis:
    """All m_st of one context, with the change of basis from the word basis.

    Elements are ordered shape by shape in the order of ``enumerate_rd_partitions`` and,
    inside a shape, by the pair (s, t) in the order of ``standard_tableaux``.

    Args:
        context: the algebra
        max_dimension: refuse contexts above this dimension
    """

    def __init__(self, context: AlgebraContext, max_dimension: int | None = None):
        if max_dimension is not None and context.dimension > max_dimension:
            raise SizeLimitError(
                f"cellular basis of dimension {context.dimension} exceeds the limit {max_dimension}"
            )
        self.context = context
        self.shapes = enumerate_rd_partitions(context.r, context.d, context.n)
        self.data = {}
        self.elements: list[CellularBasisElement] = []
        for shape in self.shapes:
            datum = self.data[shape] = murphy_m_lambda(context, shape)
            tableaux = standard_tableaux(shape)
            right = {t: datum.m * context.g_w(coset_rep(t)[0]) for t in tableaux}
            for s in tableaux:
                left = context.g_w(coset_rep(s)[0].inverse())
                for t in tableaux:
                    self.elements.append(CellularBasisElement(shape, s, t, left * right[t]))
        self.position = {(e.s, e.t): i for i, e in enumerate(self.elements)}
        self._inverse: ExactMatrix | None = None
        log.info(f"Cellular basis of {context}: {len(self.elements)} elements")

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, pair: tuple[RDTableau, RDTableau]) -> Element:
        return self.elements[self.position[pair]].value

    def vectors(self) -> list[dict[int, Cyclotomic]]:
        return [self.context.vector(e.value) for e in self.elements]

    @property
    def matrix(self) -> ExactMatrix:
        """Rows are the m_st in word coordinates."""
        return ExactMatrix.from_sparse(self.vectors(), self.context.dimension, self.context.order)

    def inverse(self) -> ExactMatrix:
        if self._inverse is None:
            self._inverse = self.matrix.inverse()
        return self._inverse

    def coordinates(self, x: Element) -> dict[int, Cyclotomic]:
        """Nonzero c_i with x = sum_i c_i m_(s_i t_i)."""
        inv = self.inverse()
        zero = Cyclotomic.zero(self.context.order)
        out = [zero] * len(self.elements)
        for j, xj in self.context.vector(x).items():
            row = inv.rows[j]
            out = [acc + xj * m if m else acc for acc, m in zip(out, row)]
        return {i: c for i, c in enumerate(out) if c}

    def expand(self, x: Element) -> dict[Key, Cyclotomic]:
        return {self.key(i): c for i, c in self.coordinates(x).items()}

    def key(self, i: int) -> Key:
        e = self.elements[i]
        return (e.shape, e.s, e.t)

    def combination(self, coefficients: dict[Key, Cyclotomic]) -> Element:
        out = self.context.zero()
        for (_, s, t), c in coefficients.items():
            out = out + self[(s, t)].scale(c)
        return out

    def above(self, shape: RDPartition) -> list[int]:
        """Indices spanning A^(>shape)."""
        return [i for i, e in enumerate(self.elements) if strictly_dominates(e.shape, shape)]


@lru_cache(maxsize=8)
def cellular_basis(context: AlgebraContext, max_dimension: int | None = None) -> CellularBasis:
    return CellularBasis(context, max_dimension)


def column_shapes(r: int, d: int, n: int) -> list[RDPartition]:
    """Shapes with every r-component a single column (1^(n_k)) at the last d-position."""
    out = []
    for sizes in product(range(n + 1), repeat=r):
        if sum(sizes) != n:
            continue
        out.append(
            RDPartition([[()] * (d - 1) + [(1,) * size] for size in sizes])
        )
    return out


def framing_tableaux(context: AlgebraContext) -> list[RDTableau]:
    """M_n: the standard tableaux of the column shapes."""
    return [
        t for shape in column_shapes(context.r, context.d, context.n)
        for t in standard_tableaux(shape)
    ]


def framing_subalgebra_checks(context: AlgebraContext) -> tuple[list[Check], dict]:
    """m_ss for s in M_n lie in the span of the t-monomials, form a basis of it, and
    resolve the identity.

    Returns the checks and the coefficients of 1, keyed by the tableau string.
    """
    tableaux = framing_tableaux(context)
    elements = [murphy_m_st(context, s, s).value for s in tableaux]
    checks = []
    outside = [
        str(s) for s, x in zip(tableaux, elements)
        if any(any(w.alpha) or not w.perm.is_identity() for w in x.terms)
    ]
    checks.append(Check.of("framing_subalgebra", not outside, {"count": len(tableaux)}, outside))

    vectors = [context.vector(x) for x in elements]
    echelon = EchelonBasis()
    echelon.extend(vectors)
    expected = context.r ** context.n
    checks.append(
        Check.of("framing_basis", echelon.rank == expected == len(tableaux),
                 {"expected": expected}, {"rank": echelon.rank, "count": len(tableaux)})
    )

    system = ExactMatrix.from_sparse(vectors, context.dimension, context.order).transpose()
    target = [Cyclotomic.zero(context.order)] * context.dimension
    target[context.index(next(iter(context.one().terms)))] = context.one_scalar
    try:
        solution = system.solve(target)
    except NoSolutionError:
        checks.append(Check.of("identity_decomposition", False, None, "1 is not in the span"))
        return checks, {}
    coefficients = {str(s): str(c) for s, c in zip(tableaux, solution) if c}
    rebuilt = context.zero()
    for x, c in zip(elements, solution):
        rebuilt = rebuilt + x.scale(c)
    checks.append(
        Check.of("identity_decomposition", rebuilt == context.one(), None, {"rebuilt": str(rebuilt)})
    )
    return checks, coefficients


def initial_row(basis: CellularBasis, t: RDTableau) -> Element:
    """m_(t^lambda t)."""
    return basis[(initial_tableau(t.shape), t)]
