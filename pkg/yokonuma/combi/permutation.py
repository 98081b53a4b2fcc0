"""Permutations of {1..n} acting on the right.

``w[j-1]`` is the image ``(j)w``; products compose left to right, so that
``(j)(uv) = ((j)u)v``. With this convention ``w * s_i`` swaps the values i and i+1 of
``w`` and ``s_i * w`` swaps the positions i and i+1.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

__all__ = ["Permutation", "symmetric_group", "young_subgroup"]


class Permutation(tuple):
    """A permutation stored as its tuple of images (1-based)."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The simple transposition s_i = (i, i+1) in S_n."""
        if not 1 <= i < n:
            raise IndexError(f"simple transposition s_{i} is not in S_{n}")
        images = list(range(1, n + 1))
        images[i - 1], images[i] = i + 1, i
        return cls._trusted(tuple(images))

    @classmethod
    def from_word(cls, word: Sequence[int], n: int) -> "Permutation":
        """The product s_{word[0]} s_{word[1]} ... in S_n."""
        w = cls.identity(n)
        for i in word:
            w = w.right_simple(i)
        return w

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, j: int) -> int:
        return self[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError(f"cannot compose S_{len(self)} with S_{len(other)}")
        return Permutation._trusted(tuple(other[x - 1] for x in self))

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        out = Permutation.identity(len(self))
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def right_simple(self, i: int) -> "Permutation":
        """w * s_i: exchanges the values i and i+1."""
        if not 1 <= i < len(self):
            raise IndexError(f"simple transposition s_{i} is not in S_{len(self)}")
        return Permutation._trusted(
            tuple(i + 1 if x == i else i if x == i + 1 else x for x in self)
        )

    def left_simple(self, i: int) -> "Permutation":
        """s_i * w: exchanges the positions i and i+1."""
        if not 1 <= i < len(self):
            raise IndexError(f"simple transposition s_{i} is not in S_{len(self)}")
        images = list(self)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation._trusted(tuple(images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for j, x in enumerate(self, start=1):
            inv[x - 1] = j
        return Permutation._trusted(tuple(inv))

    def length(self) -> int:
        """Coxeter length, i.e. the number of inversions."""
        return sum(
            1
            for a in range(len(self))
            for b in range(a + 1, len(self))
            if self[a] > self[b]
        )

    def is_identity(self) -> bool:
        return all(x == j for j, x in enumerate(self, start=1))

    def is_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w), i.e. i+1 comes before i among the images."""
        inv = self.inverse()
        return inv[i - 1] > inv[i]

    def right_descents(self) -> list[int]:
        inv = self.inverse()
        return [i for i in range(1, len(self)) if inv[i - 1] > inv[i]]

    def left_descents(self) -> list[int]:
        return [i for i in range(1, len(self)) if self[i - 1] > self[i]]

    def reduced_word(self) -> tuple[int, ...]:
        return _reduced_word(tuple(self))

    def extend(self, m: int) -> "Permutation":
        """The image of w under S_n -> S_m fixing n+1..m."""
        if m < len(self):
            raise ValueError(f"cannot restrict S_{len(self)} to S_{m}")
        return Permutation._trusted(tuple(self) + tuple(range(len(self) + 1, m + 1)))

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


@lru_cache(maxsize=None)
def _reduced_word(images: tuple) -> tuple[int, ...]:
    w = Permutation._trusted(images)
    descents = w.right_descents()
    if not descents:
        return ()
    i = descents[-1]
    return _reduced_word(tuple(w.right_simple(i))) + (i,)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> tuple[Permutation, ...]:
    """All of S_n in lexicographic order of the images."""
    return tuple(Permutation._trusted(p) for p in permutations(range(1, n + 1)))


def young_subgroup(composition: Sequence[int]) -> list[Permutation]:
    """The Young subgroup S_{mu_1} x S_{mu_2} x ... permuting consecutive blocks."""
    blocks, start = [], 1
    for part in composition:
        blocks.append(list(range(start, start + part)))
        start += part
    n = start - 1
    group = [Permutation.identity(n)]
    for block in blocks:
        if len(block) < 2:
            continue
        extended = []
        for perm in permutations(block):
            images = list(range(1, n + 1))
            for src, dst in zip(block, perm):
                images[src - 1] = dst
            step = Permutation._trusted(tuple(images))
            extended.extend(w * step for w in group)
        group = extended
    return sorted(group)
