"""Exact linear algebra over Q(zeta_N).

Dense work is delegated to sympy's ``DomainMatrix``: over ``QQ`` when every entry is
rational, otherwise over the algebraic field ``field_domain(N)``.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from yokonuma.errors import NoSolutionError
from yokonuma.fields.cyclotomic import Cyclotomic, field_domain

__all__ = ["EchelonBasis", "ExactMatrix"]


def _lift(x, order: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    return Cyclotomic.from_rational(x, order)


class ExactMatrix:
    """A dense matrix of ``Cyclotomic`` entries of one fixed order.

    Args:
        rows: the matrix rows
        order: cyclotomic order of the entries
        ncols: number of columns, needed only for matrices without rows
    """

    def __init__(self, rows: Iterable[Sequence], order: int, ncols: int | None = None):
        self.order = order
        self.rows = [[_lift(x, order) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(row) != self.ncols for row in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, size: int, order: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(size)] for i in range(size)], order)

    @classmethod
    def from_sparse(
        cls, vectors: Sequence[Mapping[int, Cyclotomic]], ncols: int, order: int
    ) -> "ExactMatrix":
        zero = Cyclotomic.zero(order)
        rows = []
        for vec in vectors:
            row = [zero] * ncols
            for j, c in vec.items():
                row[j] = c
            rows.append(row)
        return cls(rows, order, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_rational(self) -> bool:
        return all(x.is_rational() for row in self.rows for x in row)

    def to_domain_matrix(self, domain=None) -> DomainMatrix:
        """The matrix over ``domain``; by default the smallest of QQ and Q(zeta_N)."""
        if domain is None:
            domain = QQ if self.is_rational() else field_domain(self.order)
        if domain is QQ:
            rows = [[x.to_rational() for x in row] for row in self.rows]
        else:
            rows = [[x.to_domain() for x in row] for row in self.rows]
        return DomainMatrix(rows, self.shape, domain)

    def from_domain_matrix(self, dm: DomainMatrix) -> "ExactMatrix":
        rational = dm.domain is QQ
        rows = [
            [
                Cyclotomic.from_rational(x, self.order)
                if rational
                else Cyclotomic.from_domain(x, self.order)
                for x in row
            ]
            for row in dm.to_list()
        ]
        return ExactMatrix(rows, self.order, dm.shape[1])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.order,
            self.nrows,
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if not (self.nrows and self.ncols and other.ncols):
            zero = Cyclotomic.zero(self.order)
            return ExactMatrix(
                [[zero] * other.ncols for _ in range(self.nrows)], self.order, other.ncols
            )
        rational = self.is_rational() and other.is_rational()
        domain = QQ if rational else field_domain(self.order)
        dm = self.to_domain_matrix(domain).matmul(other.to_domain_matrix(domain))
        return self.from_domain_matrix(dm)

    def row_reduce(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        if not self.nrows or not self.ncols:
            return ExactMatrix(self.rows, self.order, self.ncols), ()
        dm, pivots = self.to_domain_matrix().rref()
        return self.from_domain_matrix(dm), tuple(pivots)

    def rank(self) -> int:
        if not self.nrows or not self.ncols:
            return 0
        return self.to_domain_matrix().rank()

    def determinant(self) -> Cyclotomic:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if not self.nrows:
            return Cyclotomic.one(self.order)
        dm = self.to_domain_matrix()
        det = dm.det()
        if dm.domain is QQ:
            return Cyclotomic.from_rational(det, self.order)
        return Cyclotomic.from_domain(det, self.order)

    def inverse(self) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        if not self.nrows:
            return ExactMatrix([], self.order, 0)
        try:
            inv = self.to_domain_matrix().inv()
        except DMNonInvertibleMatrixError as exc:
            raise NoSolutionError("matrix is singular") from exc
        return self.from_domain_matrix(inv)

    def solve(self, rhs: Sequence) -> list[Cyclotomic]:
        """Returns one solution x of ``self @ x = rhs``; free variables are set to 0."""
        if len(rhs) != self.nrows:
            raise ValueError("right-hand side has the wrong length")
        augmented = [list(row) + [_lift(b, self.order)] for row, b in zip(self.rows, rhs)]
        reduced, pivots = ExactMatrix(augmented, self.order, self.ncols + 1).row_reduce()
        if pivots and pivots[-1] == self.ncols:
            raise NoSolutionError("inconsistent linear system")
        solution = [Cyclotomic.zero(self.order)] * self.ncols
        for i, p in enumerate(pivots):
            solution[p] = reduced.rows[i][self.ncols]
        return solution

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols}, order={self.order})"


class EchelonBasis:
    """Incrementally maintained reduced echelon basis of sparse vectors.

    Vectors are mappings from column index to ``Cyclotomic``. Every stored row has a
    unit pivot and zeros in all other pivot columns, so reducing a vector is a single
    pass over the pivots it touches.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, Cyclotomic]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Mapping[int, Cyclotomic]) -> dict[int, Cyclotomic]:
        out = {j: c for j, c in vector.items() if c}
        for p in [j for j in out if j in self.rows]:
            factor = out.get(p)
            if not factor:
                continue
            for j, c in self.rows[p].items():
                value = out.get(j)
                value = -factor * c if value is None else value - factor * c
                if value:
                    out[j] = value
                else:
                    out.pop(j, None)
        return out

    def contains(self, vector: Mapping[int, Cyclotomic]) -> bool:
        return not self.reduce(vector)

    def add(self, vector: Mapping[int, Cyclotomic]) -> bool:
        """Adds ``vector`` to the span; returns False when it was already there."""
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual)
        inv = residual[pivot].inverse()
        row = {j: c * inv for j, c in residual.items()}
        for other in self.rows.values():
            factor = other.get(pivot)
            if factor:
                for j, c in row.items():
                    value = other.get(j)
                    value = -factor * c if value is None else value - factor * c
                    if value:
                        other[j] = value
                    else:
                        other.pop(j, None)
        self.rows[pivot] = row
        return True

    def extend(self, vectors: Iterable[Mapping[int, Cyclotomic]]) -> int:
        return sum(self.add(v) for v in vectors)
