"""The two-layer rewriting engine behind every product in the algebra.

The affine layer moves X- and t-monomials to the left of the braid generators with
the push rules

    g_i X^gamma = X^(s_i gamma) g_i + (q - q^-1) sum_{delta in D_i(gamma)} +-X^delta e_i
    g_w t^beta  = t^beta' g_w,  beta'_k = beta_((k)w)
    g_y g_i     = g_(y s_i) + (q - q^-1) e_(j,k) g_y     when l(y s_i) < l(y)

and so brings any product to a sum of words X^alpha t^beta g_w. The cyclotomic layer
then rewrites X_i^d with the rule read off from f_i = g_(i-1) f_(i-1) g_(i-1), highest
index first, until every exponent lies in [0, d).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from sympy.polys.domains import QQ

from yokonuma.combi.permutation import Permutation
from yokonuma.errors import ConsistencyError
from yokonuma.fields import Cyclotomic, ScalarPoly
from yokonuma.kernel.words import (
    Word,
    add_exponents,
    add_framing,
    is_normal,
    pull_framing,
    swap,
    unit,
)
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)

Terms = dict[Word, Cyclotomic]

MAX_REWRITE_DEPTH = 10_000


def accumulate(out: dict, key, value: Cyclotomic) -> None:
    """out[key] += value, dropping the key when the sum vanishes."""
    current = out.get(key)
    if current is None:
        if value:
            out[key] = value
        return
    total = current + value
    if total:
        out[key] = total
    else:
        del out[key]


class BootstrapRecord(NamedTuple):
    index: int
    rule_terms: int
    f_leading_ok: bool
    h_constant_ok: bool


def divided_difference(gamma: tuple, i: int) -> list[tuple[tuple, int]]:
    """The exponents delta and signs of the correction term of g_i X^gamma.

    Only the difference gamma_i - gamma_(i+1) matters, so negative exponents are fine.
    """
    a, b = gamma[i - 1], gamma[i]
    if a == b:
        return []
    c, m = min(a, b), abs(a - b)
    out = []
    for k in range(m):
        delta = list(gamma)
        if a > b:
            delta[i - 1], delta[i] = c + m - 1 - k, c + k + 1
            out.append((tuple(delta), -1))
        else:
            delta[i - 1], delta[i] = c + k, c + m - k
            out.append((tuple(delta), 1))
    return out


class RewritingEngine:
    """Memoized normal-form machinery for one parameter set (r, n, d, q, v).

    Args:
        r: order of the framing generators t_j
        n: number of strands
        d: degree of the cyclotomic relation
        q: the deformation parameter
        v: roots v_1..v_d of f_1
        word_cache_size: bound of the LRU cache of word-by-word products
            (``None`` for unbounded)
    """

    def __init__(
        self,
        r: int,
        n: int,
        d: int,
        q: Cyclotomic,
        v: tuple[Cyclotomic, ...],
        word_cache_size: int | None = None,
    ):
        self.r, self.n, self.d = r, n, d
        self.order = r
        self.zero = Cyclotomic.zero(r)
        self.one = Cyclotomic.one(r)
        self.qdiff = q - q.inverse()
        self.e_weight = self.qdiff * QQ(1, r)
        f1 = ScalarPoly.from_roots(v, r)
        self.a = tuple(f1.coefficient(d - k) for k in range(d + 1))  # a_0 = 1, ..., a_d
        self.zeros = (0,) * n
        self.identity = Permutation.identity(n)

        self._gg_cache: dict = {}
        self._push_cache: dict = {}
        self._monomial_cache: dict = {}
        self.rules: dict[int, tuple[tuple[Word, Cyclotomic], ...]] = {}
        self.x_inverse: dict[int, Terms] = {}
        self.bootstrap_records: list[BootstrapRecord] = []
        self.word_product = lru_cache(maxsize=word_cache_size)(self._word_product)

    # finite part: t^eps g_y

    def gg(self, z: Permutation, v: Permutation) -> tuple:
        """g_z g_v as pairs ((eps, y), c) standing for c t^eps g_y."""
        key = (z, v)
        cached = self._gg_cache.get(key)
        if cached is not None:
            return cached
        if v.is_identity():
            result = {(self.zeros, z): self.one}
        else:
            i = v.right_descents()[-1]
            result = {}
            for (eps, y), c in self.gg(z, v.right_simple(i)):
                self._gg_letter(result, eps, y, c, i)
        cached = self._gg_cache[key] = tuple(result.items())
        return cached

    def _gg_letter(self, out: dict, eps: tuple, y: Permutation, c: Cyclotomic, i: int):
        ys = y.right_simple(i)
        accumulate(out, (eps, ys), c)
        if y.is_right_descent(i):
            inv = ys.inverse()
            for beta in self._e_shifts(eps, inv[i - 1], inv[i]):
                accumulate(out, (beta, y), c * self.e_weight)

    def _e_shifts(self, beta: tuple, j: int, k: int) -> Iterable[tuple]:
        """The framings of t^beta e_(j,k) = (1/r) sum_s t^beta t_j^s t_k^-s."""
        for s in range(self.r):
            shifted = list(beta)
            shifted[j - 1] = (shifted[j - 1] + s) % self.r
            shifted[k - 1] = (shifted[k - 1] - s) % self.r
            yield tuple(shifted)

    # affine layer

    def push(self, w: Permutation, gamma: tuple) -> tuple:
        """g_w X^gamma as pairs (word, c) with every word of the form X^a t^b g_y."""
        key = (w, gamma)
        cached = self._push_cache.get(key)
        if cached is not None:
            return cached
        if w.is_identity():
            result = {Word(gamma, self.zeros, w): self.one}
        else:
            i = w.right_descents()[-1]
            u = w.right_simple(i)
            s_i = Permutation.simple(i, self.n)
            result = {}
            for word, c in self.push(u, swap(gamma, i)):
                for (eps, y), c2 in self.gg(word.perm, s_i):
                    beta = add_framing(word.beta, eps, self.r)
                    accumulate(result, Word(word.alpha, beta, y), c * c2)
            for delta, sign in divided_difference(gamma, i):
                weight = self.e_weight if sign > 0 else -self.e_weight
                for word, c in self.push(u, delta):
                    inv = word.perm.inverse()
                    for beta in self._e_shifts(word.beta, inv[i - 1], inv[i]):
                        accumulate(result, Word(word.alpha, beta, word.perm), c * weight)
        cached = self._push_cache[key] = tuple(result.items())
        return cached

    def affine_word_product(self, x: Word, y: Word) -> Terms:
        out: Terms = {}
        for word, c in self.push(x.perm, y.alpha):
            alpha = add_exponents(x.alpha, word.alpha)
            beta = add_framing(
                add_framing(x.beta, word.beta, self.r), pull_framing(y.beta, word.perm), self.r
            )
            for (eps, z), c2 in self.gg(word.perm, y.perm):
                accumulate(out, Word(alpha, add_framing(beta, eps, self.r), z), c * c2)
        return out

    def affine_multiply(self, x: Mapping[Word, Cyclotomic], y: Mapping[Word, Cyclotomic]) -> Terms:
        out: Terms = {}
        for u, a in x.items():
            for v, b in y.items():
                ab = a * b
                for w, c in self.affine_word_product(u, v).items():
                    accumulate(out, w, ab * c)
        return out

    # cyclotomic layer

    def bootstrap(self) -> list[BootstrapRecord]:
        """Derives the rule X_i^d -> X_i^d - f_i for every i and the inverses X_i^-1."""
        n, d = self.n, self.d
        if n == 0:
            # Y_{r,0} is the ground field, spanned by the empty word
            log.debug("No strands: no reduction rules to derive")
            return self.bootstrap_records
        f: Terms = {
            Word(unit(n, 1, k), self.zeros, self.identity): self.a[d - k] for k in range(d + 1)
        }
        f = {w: c for w, c in f.items() if c}
        h = dict(f)
        for i in range(1, n + 1):
            if i > 1:
                g = {Word(self.zeros, self.zeros, Permutation.simple(i - 1, n)): self.one}
                g_inv = dict(g)
                for beta in self._e_shifts(self.zeros, i - 1, i):
                    accumulate(g_inv, Word(self.zeros, beta, self.identity), -self.e_weight)
                f = self.affine_multiply(self.affine_multiply(g, f), g)
                h = self.affine_multiply(self.affine_multiply(g, h), g_inv)
            leading = Word(unit(n, i, d), self.zeros, self.identity)
            f_ok = self._check_f(f, i, leading)
            h_ok = self._check_h(h, i)
            if not f_ok:
                raise ConsistencyError(f"f_{i} does not have leading term X_{i}^{d}")
            if not h_ok:
                raise ConsistencyError(f"h_{i} is not a_d plus terms of positive X_{i}-degree")
            self.rules[i] = tuple((w, -c) for w, c in sorted(f.items()) if w != leading)
            self.bootstrap_records.append(BootstrapRecord(i, len(self.rules[i]), f_ok, h_ok))
            log.debug(f"Rule for X_{i}^{d}: {len(self.rules[i])} terms")
        self._bootstrap_inverses()
        return self.bootstrap_records

    def _check_f(self, f: Terms, i: int, leading: Word) -> bool:
        if f.get(leading) != 1:
            return False
        return all(
            0 <= w.alpha[i - 1] < self.d
            and all(a >= 0 for a in w.alpha)
            and not any(w.alpha[i:])
            and all(w.perm[j] == j + 1 for j in range(i, self.n))
            for w in f
            if w != leading
        )

    def _check_h(self, h: Terms, i: int) -> bool:
        constant = Word(self.zeros, self.zeros, self.identity)
        if h.get(constant) != self.a[self.d]:
            return False
        return all(
            0 < w.alpha[i - 1] <= self.d
            and not any(w.alpha[i:])
            and all(w.perm[j] == j + 1 for j in range(i, self.n))
            for w in h
            if w != constant
        )

    def _bootstrap_inverses(self) -> None:
        n, d, a = self.n, self.d, self.a
        scale = -a[d].inverse()
        x1_inv: Terms = {}
        for k in range(d):
            accumulate(x1_inv, Word(unit(n, 1, d - 1 - k), self.zeros, self.identity), scale * a[k])
        self.x_inverse[1] = x1_inv
        for i in range(2, n + 1):
            g_inv: Terms = {Word(self.zeros, self.zeros, Permutation.simple(i - 1, n)): self.one}
            for beta in self._e_shifts(self.zeros, i - 1, i):
                accumulate(g_inv, Word(self.zeros, beta, self.identity), -self.e_weight)
            self.x_inverse[i] = self.multiply(
                self.multiply(g_inv, self.x_inverse[i - 1]), g_inv
            )

    def monomial_normal_form(self, alpha: tuple, depth: int = 0) -> tuple:
        """NF(X^alpha) as pairs (normal word, c)."""
        cached = self._monomial_cache.get(alpha)
        if cached is not None:
            return cached
        if depth > MAX_REWRITE_DEPTH:
            raise ConsistencyError(f"rewriting of X^{alpha} exceeded the step budget")
        d = self.d
        if all(0 <= x < d for x in alpha):
            result = {Word(alpha, self.zeros, self.identity): self.one}
        elif any(x < 0 for x in alpha):
            result = dict(self.monomial_normal_form(tuple(max(x, 0) for x in alpha), depth + 1))
            for k, x in enumerate(alpha, start=1):
                for _ in range(-x):
                    result = self.multiply(result, self.x_inverse[k])
        else:
            i = max(k for k, x in enumerate(alpha, start=1) if x >= d)
            rest = list(alpha)
            rest[i - 1] -= d
            result = {}
            for rho, c in self.rules[i]:
                for word, c2 in self.monomial_normal_form(add_exponents(rest, rho.alpha), depth + 1):
                    self._tail_into(result, word, rho.beta, rho.perm, c * c2)
        cached = self._monomial_cache[alpha] = tuple(result.items())
        return cached

    def _tail_into(self, out: Terms, word: Word, beta: tuple, perm: Permutation, c: Cyclotomic):
        """out += c * word * t^beta g_perm for a normal ``word``."""
        framing = add_framing(word.beta, pull_framing(beta, word.perm), self.r)
        for (eps, z), c2 in self.gg(word.perm, perm):
            accumulate(out, Word(word.alpha, add_framing(framing, eps, self.r), z), c * c2)

    def reduce(self, terms: Mapping[Word, Cyclotomic]) -> Terms:
        """Cyclotomic normal form of an affine linear combination."""
        out: Terms = {}
        for word, c in terms.items():
            if is_normal(word, self.d):
                accumulate(out, word, c)
                continue
            for nf_word, c2 in self.monomial_normal_form(word.alpha):
                self._tail_into(out, nf_word, word.beta, word.perm, c * c2)
        return out

    def _word_product(self, x: Word, y: Word) -> tuple:
        return tuple(self.reduce(self.affine_word_product(x, y)).items())

    def multiply(self, x: Mapping[Word, Cyclotomic], y: Mapping[Word, Cyclotomic]) -> Terms:
        out: Terms = {}
        for u, a in x.items():
            for v, b in y.items():
                ab = a * b
                for w, c in self.word_product(u, v):
                    accumulate(out, w, ab * c)
        return out

    def cache_stats(self) -> dict:
        info = self.word_product.cache_info()
        return {
            "gg": len(self._gg_cache),
            "push": len(self._push_cache),
            "monomials": len(self._monomial_cache),
            "word_products": info.currsize,
            "word_product_hits": info.hits,
            "word_product_misses": info.misses,
        }
