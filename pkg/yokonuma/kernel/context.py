"""Parameters of a cyclotomic Yokonuma-Hecke algebra and its generators."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from yokonuma.combi.permutation import Permutation
from yokonuma.errors import ContextMismatchError, SchemaError
from yokonuma.fields import Cyclotomic, to_rational
from yokonuma.kernel.element import Element
from yokonuma.kernel.rewriting import BootstrapRecord, RewritingEngine, accumulate
from yokonuma.kernel.words import (
    Word,
    dimension,
    extend_word,
    normal_words,
    unit,
    word_at,
    word_index,
)
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)

# contexts kept alive by the parameter cache; older ones are rebuilt on demand
CONTEXT_CACHE_SIZE = 32


def parse_rational(value, location: str):
    try:
        return to_rational(value.strip() if isinstance(value, str) else value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(str(exc), location) from exc


def parse_parameters(v, location: str = "algebra.v") -> list:
    """Accepts "1,5", a list of exact values, or a single value."""
    if isinstance(v, str):
        items = [x for x in v.split(",") if x.strip()]
    elif isinstance(v, Iterable):
        items = list(v)
    else:
        items = [v]
    return [parse_rational(x, f"{location}[{k}]") for k, x in enumerate(items)]


class AlgebraContext:
    """The algebra Y_{r,n}^d over Q(zeta_r) at fixed q and v_1..v_d.

    Building a context bootstraps the reduction rules of the rewriting engine; after
    that the context is read-only. Recently used contexts are cached by their parameters,
    so two requests for the same algebra return the same object.

    Args:
        r: order of the framing generators
        n: number of strands
        d: degree of the cyclotomic relation
        q: nonzero deformation parameter
        v: the d nonzero roots v_1..v_d of f_1
        word_cache_size: bound of the word-product cache
    """

    def __init__(
        self,
        r: int,
        n: int,
        d: int,
        q: Cyclotomic,
        v: Sequence[Cyclotomic],
        word_cache_size: int | None = None,
    ):
        if r < 1 or d < 1 or n < 0:
            raise SchemaError(f"need r, d >= 1 and n >= 0, got r={r} n={n} d={d}", "algebra")
        if len(v) != d:
            raise SchemaError(f"expected {d} parameters v, got {len(v)}", "algebra.v")
        if not q:
            raise SchemaError("q must be nonzero", "algebra.q")
        if any(not x for x in v):
            raise SchemaError("the parameters v_i must be nonzero", "algebra.v")
        self.r, self.n, self.d = r, n, d
        self.order = r
        self.q = q
        self.v = tuple(v)
        self.word_cache_size = word_cache_size
        self.key = (r, n, d, q, self.v)
        self.engine = RewritingEngine(r, n, d, q, self.v, word_cache_size)
        self.engine.bootstrap()
        self.qdiff = self.engine.qdiff
        self.a = self.engine.a[1:]
        log.debug(f"Built {self}: {len(self.engine.rules)} reduction rules")

    @classmethod
    def from_params(
        cls,
        r: int = 1,
        n: int = 1,
        d: int = 1,
        q="2",
        v="1",
        word_cache_size: int | None = None,
    ) -> "AlgebraContext":
        """Builds (or fetches) a context from exact rational parameters."""
        order = int(r)
        q_value = Cyclotomic.from_rational(parse_rational(q, "algebra.q"), order)
        v_values = tuple(Cyclotomic.from_rational(x, order) for x in parse_parameters(v))
        return cls.create(order, int(n), int(d), q_value, v_values, word_cache_size)

    @classmethod
    def create(cls, r, n, d, q, v, word_cache_size=None) -> "AlgebraContext":
        """Builds (or fetches) the context; the last ``CONTEXT_CACHE_SIZE`` are cached."""
        return _cached_context(r, n, d, q, tuple(v), word_cache_size)

    @staticmethod
    def cache_info():
        return _cached_context.cache_info()

    def with_n(self, m: int) -> "AlgebraContext":
        """The algebra with the same parameters on m strands."""
        if m == self.n:
            return self
        return AlgebraContext.create(self.r, m, self.d, self.q, self.v, self.word_cache_size)

    def same_parameters(self, other: "AlgebraContext") -> bool:
        return (self.r, self.d, self.q, self.v) == (other.r, other.d, other.q, other.v)

    def check(self, x: Element) -> None:
        if x.context is not self and x.context.key != self.key:
            raise ContextMismatchError(
                f"element of {x.context} used in {self}"
            )

    # scalars

    def scalar(self, value) -> Cyclotomic:
        if isinstance(value, Cyclotomic):
            if value.order != self.order:
                raise ContextMismatchError(
                    f"scalar of Q(zeta_{value.order}) used over Q(zeta_{self.order})"
                )
            return value
        return Cyclotomic.from_rational(value, self.order)

    def zeta(self, k: int) -> Cyclotomic:
        """zeta_k = zeta^(k-1)."""
        return Cyclotomic.zeta(self.order, k)

    # elements

    def element(self, terms: Mapping[Word, Cyclotomic]) -> Element:
        return Element(self, {w: c for w, c in terms.items() if c})

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return self.constant(1)

    def constant(self, value) -> Element:
        zeros = (0,) * self.n
        return self.element({Word(zeros, zeros, Permutation.identity(self.n)): self.scalar(value)})

    def word(self, alpha: Sequence[int], beta: Sequence[int], w: Sequence[int] | None = None) -> Element:
        """X^alpha t^beta g_w; exponents of X outside [0, d) are reduced."""
        alpha, beta = tuple(int(x) for x in alpha), tuple(int(x) % self.r for x in beta)
        w = Permutation.identity(self.n) if w is None else Permutation(w)
        if len(alpha) != self.n or len(beta) != self.n or len(w) != self.n:
            raise ValueError(f"word of the wrong rank for n={self.n}")
        return self.normal_form({Word(alpha, beta, w): self.one_scalar})

    @property
    def one_scalar(self) -> Cyclotomic:
        return self.engine.one

    def t(self, j: int, power: int = 1) -> Element:
        self._check_index(j, self.n, "t")
        zeros = (0,) * self.n
        beta = tuple(x % self.r for x in unit(self.n, j, power))
        return self.element({Word(zeros, beta, Permutation.identity(self.n)): self.one_scalar})

    def g(self, i: int) -> Element:
        self._check_index(i, self.n - 1, "g")
        return self.g_w(Permutation.simple(i, self.n))

    def g_w(self, w: Sequence[int]) -> Element:
        zeros = (0,) * self.n
        return self.element({Word(zeros, zeros, Permutation(w)): self.one_scalar})

    def e(self, i: int, j: int | None = None) -> Element:
        """e_(i,j) = (1/r) sum_s t_i^s t_j^-s; e_i is e_(i,i+1)."""
        j = i + 1 if j is None else j
        self._check_index(i, self.n, "e")
        self._check_index(j, self.n, "e")
        if i == j:
            return self.one()
        zeros = (0,) * self.n
        identity = Permutation.identity(self.n)
        terms: dict = {}
        weight = self.scalar(1) / self.r
        for beta in self.engine._e_shifts(zeros, i, j):
            accumulate(terms, Word(zeros, beta, identity), weight)
        return self.element(terms)

    def g_inverse(self, i: int) -> Element:
        """g_i^-1 = g_i - (q - q^-1) e_i."""
        return self.g(i) - self.qdiff * self.e(i)

    def X(self, k: int, power: int = 1) -> Element:
        self._check_index(k, self.n, "X")
        return self.normal_form({Word(unit(self.n, k, power), (0,) * self.n,
                                      Permutation.identity(self.n)): self.one_scalar})

    def X_inverse(self, k: int) -> Element:
        self._check_index(k, self.n, "X")
        return self.element(self.engine.x_inverse[k])

    @staticmethod
    def _check_index(i: int, bound: int, name: str) -> None:
        if not 1 <= i <= bound:
            raise IndexError(f"generator {name}_{i} out of range 1..{bound}")

    # products

    def normal_form(self, terms: Mapping[Word, Cyclotomic]) -> Element:
        """Cyclotomic normal form of an affine linear combination of words."""
        return self.element(self.engine.reduce(terms))

    def affine_multiply(self, x: Mapping[Word, Cyclotomic], y: Mapping[Word, Cyclotomic]) -> dict:
        """Product in the affine algebra, no cyclotomic reduction."""
        return self.engine.affine_multiply(x, y)

    def multiply(self, x: Element, y: Element) -> Element:
        self.check(x)
        self.check(y)
        return Element(self, self.engine.multiply(x.terms, y.terms))

    def product(self, factors: Iterable[Element]) -> Element:
        out = self.one()
        for factor in factors:
            out = self.multiply(out, factor)
        return out

    def star(self, x: Element) -> Element:
        """The anti-involution fixing every g_i, t_j and X_k."""
        self.check(x)
        out: dict = {}
        zeros = (0,) * self.n
        identity = Permutation.identity(self.n)
        for word, c in x.terms.items():
            left = Word(zeros, zeros, word.perm.inverse())
            right = Word(word.alpha, word.beta, identity)
            for w, c2 in self.engine.word_product(left, right):
                accumulate(out, w, c * c2)
        return Element(self, out)

    # basis

    @property
    def dimension(self) -> int:
        return dimension(self.r, self.n, self.d)

    def basis_words(self) -> Iterator[Word]:
        return normal_words(self.r, self.n, self.d)

    def basis(self) -> Iterator[Element]:
        for word in self.basis_words():
            yield self.element({word: self.one_scalar})

    def index(self, word: Word) -> int:
        return word_index(word, self.r, self.d)

    def vector(self, x: Element) -> dict[int, Cyclotomic]:
        """Sparse coordinates of x in the word basis."""
        self.check(x)
        return {self.index(w): c for w, c in x.terms.items()}

    def from_vector(self, vector: Mapping[int, Cyclotomic]) -> Element:
        return self.element(
            {word_at(i, self.r, self.n, self.d): self.scalar(c) for i, c in vector.items()}
        )

    def embed(self, x: Element) -> Element:
        """The image of x under Y_m -> Y_n for m <= n."""
        if x.context is self:
            return x
        if not self.same_parameters(x.context) or x.context.n > self.n:
            raise ContextMismatchError(f"cannot embed an element of {x.context} into {self}")
        return Element(self, {extend_word(w, self.n): c for w, c in x.terms.items()})

    def bootstrap_report(self) -> list[BootstrapRecord]:
        return list(self.engine.bootstrap_records)

    def cache_stats(self) -> dict:
        return self.engine.cache_stats()

    def params(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "d": self.d,
            "q": str(self.q),
            "v": [str(x) for x in self.v],
        }

    def __repr__(self) -> str:
        v = ",".join(str(x) for x in self.v)
        return f"AlgebraContext(r={self.r}, n={self.n}, d={self.d}, q={self.q}, v=({v}))"


@lru_cache(maxsize=CONTEXT_CACHE_SIZE)
def _cached_context(r, n, d, q, v, word_cache_size) -> AlgebraContext:
    return AlgebraContext(r, n, d, q, v, word_cache_size)
