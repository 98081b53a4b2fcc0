"""The inclusion Y_n ⊂ Y_(n+1): coset basis, summand decomposition and the projection theta.

Y_(n+1) is a free right Y_n-module on the elements X_j^a t_j^b g_j...g_n, and as a
bimodule it splits as Y_n g_n Y_n plus the summands X_(n+1)^a t_(n+1)^b Y_n. The
projection onto the summand with (a, b) = (0, 0) is theta; composing the projections
down to Y_0 gives the trace form whose Gram matrix certifies the Frobenius property.
"""

from __future__ import annotations

import random

from functools import lru_cache
from typing import NamedTuple

from yokonuma.errors import SizeLimitError
from yokonuma.fields import Cyclotomic, EchelonBasis, ExactMatrix
from yokonuma.kernel.context import AlgebraContext
from yokonuma.kernel.element import Element
from yokonuma.kernel.relations import element_witness, identity_check, random_word
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)


class CosetLabel(NamedTuple):
    j: int
    a: int
    b: int


def coset_element(big: AlgebraContext, j: int, a: int, b: int) -> Element:
    """X_j^a t_j^b g_j g_(j+1) ... g_(n) inside Y_(n+1), n = big.n - 1."""
    x = big.X(j, a) * big.t(j, b) if a else big.t(j, b)
    for i in range(j, big.n):
        x = x * big.g(i)
    return x


def coset_labels(base: AlgebraContext) -> list[CosetLabel]:
    return [
        CosetLabel(j, a, b)
        for j in range(1, base.n + 2)
        for a in range(base.d)
        for b in range(base.r)
    ]


def algebra_generators(context: AlgebraContext) -> list[tuple[str, Element]]:
    """Generators of Y_n as an algebra: g_i, t_j and X_1."""
    gens = [(f"g{i}", context.g(i)) for i in range(1, context.n)]
    gens += [(f"t{j}", context.t(j)) for j in range(1, context.n + 1)]
    if context.n:
        gens.append(("X1", context.X(1)))
    return gens


class TowerDecomposition:
    """Coordinates of Y_(n+1) in the basis {c * y : c a coset element, y a word of Y_n}.

    Args:
        base: the context of Y_n; Y_(n+1) is ``base.with_n(base.n + 1)``
    """

    def __init__(self, base: AlgebraContext):
        self.base = base
        self.big = base.with_n(base.n + 1)
        self.labels = coset_labels(base)
        self.cosets = {label: coset_element(self.big, *label) for label in self.labels}
        self.base_basis = list(self.base.basis())
        self.family: list[tuple[CosetLabel, int]] = []
        self.vectors: list[dict[int, Cyclotomic]] = []
        for label in self.labels:
            c = self.cosets[label]
            for k, y in enumerate(self.base_basis):
                self.family.append((label, k))
                self.vectors.append(self.big.vector(c * self.big.embed(y)))
        self.position = {key: i for i, key in enumerate(self.family)}
        self._inverse: ExactMatrix | None = None
        log.debug(f"Tower {base.n} -> {base.n + 1}: {len(self.family)} spanning elements")

    @property
    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_sparse(self.vectors, self.big.dimension, self.big.order)

    def inverse(self) -> ExactMatrix:
        if self._inverse is None:
            self._inverse = self.matrix.inverse()
        return self._inverse

    def coordinates(self, x: Element) -> list[Cyclotomic]:
        """c with x = sum_i c_i family_i."""
        inv = self.inverse()
        zero = Cyclotomic.zero(self.big.order)
        out = [zero] * len(self.family)
        for j, xj in self.big.vector(x).items():
            row = inv.rows[j]
            out = [acc + xj * m if m else acc for acc, m in zip(out, row)]
        return out

    def component(self, x: Element, label: CosetLabel, coords: list | None = None) -> Element:
        """The Y_n-coefficient of the coset element ``label`` in x."""
        coords = self.coordinates(x) if coords is None else coords
        terms: dict = {}
        for k, y in enumerate(self.base_basis):
            c = coords[self.position[(label, k)]]
            if c:
                (word,) = y.terms
                terms[word] = c
        return self.base.element(terms)

    def theta(self, x: Element) -> Element:
        """Projection of Y_(n+1) onto its summand Y_n."""
        return self.component(x, CosetLabel(self.base.n + 1, 0, 0))


def theta_projection(x: Element) -> Element:
    """theta(x) for x in Y_(n+1), as an element of Y_n."""
    big = x.context
    if big.n < 1:
        raise ValueError("theta needs an element of Y_(n+1) with n >= 0")
    return tower(big.with_n(big.n - 1)).theta(x)


@lru_cache(maxsize=16)
def tower(base: AlgebraContext) -> TowerDecomposition:
    return TowerDecomposition(base)


def tower_decomposition_check(base: AlgebraContext, samples: int = 10, seed: int = 1234) -> list[Check]:
    """Rank of the coset family, summand ranks and bimodule closure of each summand."""
    n, r, d = base.n, base.r, base.d
    decomposition = tower(base)
    big = decomposition.big
    instance = {"n": n, "n+1": n + 1}
    checks = []

    echelon = EchelonBasis()
    dependent = None
    for key, vector in zip(decomposition.family, decomposition.vectors):
        if not echelon.add(vector) and dependent is None:
            dependent = {"j": key[0].j, "a": key[0].a, "b": key[0].b, "word": key[1]}
    checks.append(
        Check.of(
            "tower_rank",
            echelon.rank == big.dimension and len(decomposition.family) == big.dimension,
            {**instance, "expected": big.dimension},
            {"rank": echelon.rank, "first_dependent": dependent},
        )
    )

    summands: dict[str, list[int]] = {"Y_n g_n Y_n": []}
    for i, (label, _) in enumerate(decomposition.family):
        name = "Y_n g_n Y_n" if label.j <= n else f"X^{label.a} t^{label.b} Y_n"
        summands.setdefault(name, []).append(i)
    expected = {"Y_n g_n Y_n": n * r * d * base.dimension}
    total = 0
    rng = random.Random(seed)
    generators = [(name, big.embed(h)) for name, h in algebra_generators(base)]
    for name, rows in summands.items():
        span = EchelonBasis()
        span.extend(decomposition.vectors[i] for i in rows)
        total += span.rank
        want = expected.get(name, base.dimension)
        checks.append(
            Check.of("summand_rank", span.rank == want, {**instance, "summand": name, "expected": want},
                     {"rank": span.rank})
        )
        probes = rows if len(rows) <= samples else rng.sample(rows, samples)
        closed, witness = True, None
        for i in probes:
            label, k = decomposition.family[i]
            element = decomposition.cosets[label] * big.embed(decomposition.base_basis[k])
            for gen_name, h in generators:
                if not span.contains(big.vector(h * element)):
                    closed, witness = False, {"generator": gen_name, "member": [*label, k]}
                    break
            if not closed:
                break
        checks.append(Check.of("summand_bimodule", closed, {**instance, "summand": name}, witness))
    checks.append(
        Check.of("summand_total", total == big.dimension, instance,
                 {"total": total, "dimension": big.dimension})
    )
    return checks


def theta_checks(base: AlgebraContext, samples: int = 10, seed: int = 1234) -> list[Check]:
    """theta on the special elements, the bimodule property and the X_(n+1)^a expansion."""
    decomposition = tower(base)
    big = decomposition.big
    n, d = base.n, base.d
    m = n + 1
    theta = decomposition.theta
    checks = [identity_check("theta_one", theta(big.one()), base.one(), n=n)]
    for a in range(d):
        for b in range(base.r):
            if (a, b) != (0, 0):
                x = big.X(m, a) * big.t(m, b) if a else big.t(m, b)
                checks.append(identity_check("theta_vanishes", theta(x), base.zero(), a=a, b=b))
    checks.append(
        identity_check("theta_top_power", theta(big.X(m, d)), base.constant(-base.engine.a[d]))
    )

    rng = random.Random(seed)
    ok, witness = True, None
    for sample in range(samples if n else 0):
        x = random_word(big, rng)
        u, v = random_word(base, rng), random_word(base, rng)
        lhs = theta(big.embed(u) * x * big.embed(v))
        rhs = u * theta(x) * v
        if lhs != rhs:
            ok, witness = False, {"sample": sample, "x": str(x), "u": str(u), "v": str(v)}
            break
    checks.append(Check.of("theta_bimodule", ok, {"samples": samples, "seed": seed}, witness))

    # g_n ... g_i X_i^a g_i ... g_n = X_(n+1)^a + lower summands
    for i in range(1, m + 1):
        for a in range(d):
            x = big.X(i, a)
            for k in range(i, m):
                x = big.g(k) * x * big.g(k)
            coords = decomposition.coordinates(x)
            bad = []
            for label in decomposition.labels:
                if label.j != m or label.a < a:
                    continue
                part = decomposition.component(x, label, coords)
                want = base.one() if (label.a, label.b) == (a, 0) else base.zero()
                if part != want:
                    bad.append({"a": label.a, "b": label.b, "component": element_witness(part - want)})
            checks.append(Check.of("jm_leading_summand", not bad, {"i": i, "a": a}, bad))
    return checks


def theta_nondegeneracy(base: AlgebraContext) -> Check:
    """ker theta contains no nonzero left ideal: y -> (theta(b y))_b is injective."""
    decomposition = tower(base)
    big = decomposition.big
    rows: list[dict[int, Cyclotomic]] = [dict() for _ in range(big.dimension)]
    basis = list(big.basis())
    for i, b in enumerate(basis):
        for col, y in enumerate(basis):
            for k, c in base.vector(decomposition.theta(b * y)).items():
                rows[col][i * base.dimension + k] = c
    echelon = EchelonBasis()
    echelon.extend(rows)
    return Check.of(
        "theta_nondegenerate", echelon.rank == big.dimension, {"n": base.n},
        {"rank": echelon.rank, "dimension": big.dimension},
    )


def trace_vector(context: AlgebraContext) -> list[Cyclotomic]:
    """tr(b) = theta_1(...theta_n(b)) for every word b of Y_n."""
    if context.n == 0:
        return [context.one_scalar]
    lower = context.with_n(context.n - 1)
    below = trace_vector(lower)
    decomposition = tower(lower)
    out = []
    for b in context.basis():
        value = Cyclotomic.zero(context.order)
        for k, c in lower.vector(decomposition.theta(b)).items():
            value = value + c * below[k]
        out.append(value)
    return out


def trace(x: Element) -> Cyclotomic:
    context = x.context
    weights = trace_vector(context)
    total = Cyclotomic.zero(context.order)
    for k, c in context.vector(x).items():
        total = total + c * weights[k]
    return total


def frobenius_gram(context: AlgebraContext, max_dimension: int = 2000) -> ExactMatrix:
    """G_ij = tr(b_i b_j) over the word basis."""
    if context.dimension > max_dimension:
        raise SizeLimitError(
            f"Gram matrix of dimension {context.dimension} exceeds the limit {max_dimension}"
        )
    weights = trace_vector(context)
    basis = list(context.basis())
    zero = Cyclotomic.zero(context.order)
    rows = []
    for bi in basis:
        row = []
        for bj in basis:
            value = zero
            for k, c in context.vector(bi * bj).items():
                value = value + c * weights[k]
            row.append(value)
        rows.append(row)
    return ExactMatrix(rows, context.order)


def frobenius_check(context: AlgebraContext, max_dimension: int = 2000) -> list[Check]:
    gram = frobenius_gram(context, max_dimension)
    det = gram.determinant()
    log.info(f"Frobenius Gram determinant for {context}: {det}")
    return [
        Check.of(
            "gram_nonsingular", bool(det), {"dimension": context.dimension},
            {"determinant": str(det)},
        )
    ]
