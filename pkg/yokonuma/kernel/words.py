from __future__ import annotations

from math import factorial
from typing import Iterator, NamedTuple

from yokonuma.combi.permutation import Permutation, symmetric_group


class Word(NamedTuple):
    """The monomial X^alpha t^beta g_w.

    In the affine layer ``alpha`` may hold any integers; a normal word has
    0 <= alpha_i < d. ``beta`` is always reduced modulo r. Tuple order of
    (alpha, beta, perm) is the canonical term order.
    """

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    perm: Permutation


def identity_word(n: int) -> Word:
    return Word((0,) * n, (0,) * n, Permutation.identity(n))


def is_normal(word: Word, d: int) -> bool:
    return all(0 <= a < d for a in word.alpha)


def unit(n: int, k: int, value: int = 1) -> tuple[int, ...]:
    """value * e_k as an exponent vector."""
    out = [0] * n
    out[k - 1] = value
    return tuple(out)


def add_exponents(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def add_framing(a: tuple, b: tuple, r: int) -> tuple:
    return tuple((x + y) % r for x, y in zip(a, b))


def pull_framing(beta: tuple, w: Permutation) -> tuple:
    """The exponent beta' with g_w t^beta = t^beta' g_w, i.e. beta'_k = beta_{(k)w}."""
    return tuple(beta[x - 1] for x in w)


def swap(gamma: tuple, i: int) -> tuple:
    """s_i gamma: exchanges the entries i and i+1."""
    out = list(gamma)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def extend_word(word: Word, m: int) -> Word:
    pad = (0,) * (m - len(word.alpha))
    return Word(word.alpha + pad, word.beta + pad, word.perm.extend(m))


def dimension(r: int, n: int, d: int) -> int:
    return (r * d) ** n * factorial(n)


def normal_words(r: int, n: int, d: int) -> Iterator[Word]:
    """All normal words in canonical order."""
    perms = symmetric_group(n)
    for a in range(d**n):
        alpha = _digits(a, d, n)
        for b in range(r**n):
            beta = _digits(b, r, n)
            for w in perms:
                yield Word(alpha, beta, w)


def word_index(word: Word, r: int, d: int) -> int:
    """Position of a normal word in ``normal_words``."""
    n = len(word.alpha)
    a = _number(word.alpha, d)
    b = _number(word.beta, r)
    return (a * r**n + b) * factorial(n) + _perm_index(word.perm)


def word_at(index: int, r: int, n: int, d: int) -> Word:
    perms = symmetric_group(n)
    index, p = divmod(index, len(perms))
    a, b = divmod(index, r**n)
    return Word(_digits(a, d, n), _digits(b, r, n), perms[p])


def _digits(x: int, base: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        x, out[k] = divmod(x, base)
    return tuple(out)


def _number(digits: tuple, base: int) -> int:
    x = 0
    for digit in digits:
        x = x * base + digit
    return x


def _perm_index(w: Permutation) -> int:
    # Lehmer code; symmetric_group lists S_n in lexicographic order
    n = len(w)
    index = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if w[j] < w[i])
        index += smaller * factorial(n - 1 - i)
    return index
