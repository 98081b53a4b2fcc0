"""Compositions, partitions, (r,d)-partitions and set partitions."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from sympy.utilities.iterables import partitions as _integer_partitions

from yokonuma.combi.permutation import Permutation

__all__ = [
    "Composition",
    "Partition",
    "RDNode",
    "RDPartition",
    "SetPartition",
    "addable_removable",
    "dominates",
    "enumerate_rd_partitions",
    "generalized_hook",
    "hook_length",
    "integer_partitions",
    "set_partition_of",
]


class RDNode(NamedTuple):
    """The (r,d)-node ((row, col), k, l), all indices 1-based."""

    row: int
    col: int
    k: int
    l: int

    @property
    def position(self) -> tuple[int, int]:
        return (self.k, self.l)

    @property
    def classical_content(self) -> int:
        return self.col - self.row


class Composition(tuple):
    """A finite sequence of nonnegative integers; trailing zeros are dropped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, x: int) -> int:
        """lambda_x with 1-based x, zero beyond the last part."""
        return self[x - 1] if 1 <= x <= len(self) else 0

    def is_partition(self) -> bool:
        return all(self[i] >= self[i + 1] for i in range(len(self) - 1))

    def nodes(self) -> list[tuple[int, int]]:
        """Nodes (row, col) in reading order, along the rows from the top."""
        return [(a, b) for a, length in enumerate(self, start=1) for b in range(1, length + 1)]

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p >= j) for j in range(1, max(self) + 1))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self)})"


class Partition(Composition):
    """A composition with non-increasing parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if not self.is_partition():
            raise ValueError(f"parts of a partition must not increase: {list(self)}")
        return self

    def addable(self) -> list[tuple[int, int]]:
        out = []
        for a in range(1, len(self) + 2):
            b = self.part(a) + 1
            if a == 1 or self.part(a - 1) >= b:
                out.append((a, b))
        return out

    def removable(self) -> list[tuple[int, int]]:
        return [
            (a, self[a - 1])
            for a in range(1, len(self) + 1)
            if self.part(a + 1) < self[a - 1]
        ]


@lru_cache(maxsize=None)
def integer_partitions(n: int) -> tuple[Partition, ...]:
    """Partitions of n, from (n) down to (1^n)."""
    if n == 0:
        return (Partition(()),)
    out = []
    for multiplicities in _integer_partitions(n):
        parts = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        out.append(Partition(parts))
    return tuple(sorted(out, reverse=True))


class RDPartition:
    """An r-tuple of d-tuples of compositions, indexed by positions (k, l).

    Args:
        components: ``components[k-1][l-1]`` is the composition at position (k, l)
    """

    __slots__ = ("components", "_hash")

    def __init__(self, components: Sequence[Sequence[Iterable[int]]]):
        comps = tuple(
            tuple(
                c if isinstance(c, Composition) else _as_composition(c) for c in row
            )
            for row in components
        )
        if not comps or len({len(row) for row in comps}) != 1 or not comps[0]:
            raise ValueError("an (r,d)-partition needs r >= 1 rows of d >= 1 components")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "_hash", hash(comps))

    def __setattr__(self, name, value):
        raise AttributeError("RDPartition is immutable")

    @classmethod
    def empty(cls, r: int, d: int) -> "RDPartition":
        return cls([[()] * d for _ in range(r)])

    @property
    def r(self) -> int:
        return len(self.components)

    @property
    def d(self) -> int:
        return len(self.components[0])

    @property
    def size(self) -> int:
        return sum(c.size for row in self.components for c in row)

    def component(self, k: int, l: int) -> Composition:
        return self.components[k - 1][l - 1]

    def positions(self) -> list[tuple[int, int]]:
        return [(k, l) for k in range(1, self.r + 1) for l in range(1, self.d + 1)]

    def flattened(self) -> list[Composition]:
        """Components in (k, l) order: the order in which t^lambda is filled."""
        return [c for row in self.components for c in row]

    def r_sizes(self) -> list[int]:
        """|lambda^(k)| for k = 1..r."""
        return [sum(c.size for c in row) for row in self.components]

    def is_partition(self) -> bool:
        return all(c.is_partition() for row in self.components for c in row)

    def nodes(self) -> list[RDNode]:
        return [
            RDNode(a, b, k, l)
            for k, l in self.positions()
            for a, b in self.component(k, l).nodes()
        ]

    def contains(self, node: RDNode) -> bool:
        if not (1 <= node.k <= self.r and 1 <= node.l <= self.d):
            return False
        return 1 <= node.col <= self.component(node.k, node.l).part(node.row)

    def young_composition(self) -> list[int]:
        """Row lengths in filling order; S_lambda is the Young subgroup of this."""
        return [p for c in self.flattened() for p in c]

    def add_node(self, node: RDNode) -> "RDPartition":
        return self._replace(node, +1)

    def remove_node(self, node: RDNode) -> "RDPartition":
        return self._replace(node, -1)

    def _replace(self, node: RDNode, delta: int) -> "RDPartition":
        comps = [list(row) for row in self.components]
        parts = list(comps[node.k - 1][node.l - 1])
        parts.extend([0] * (node.row - len(parts)))
        parts[node.row - 1] += delta
        comps[node.k - 1][node.l - 1] = Composition(parts)
        return RDPartition(comps)

    def to_json(self) -> list:
        return [[list(c) for c in row] for row in self.components]

    @classmethod
    def from_json(cls, data: Sequence) -> "RDPartition":
        return cls(data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RDPartition):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "RDPartition") -> bool:
        return self.components < other.components

    def __repr__(self) -> str:
        return f"RDPartition({self.to_json()})"

    def __str__(self) -> str:
        def fmt(c):
            return "(" + ",".join(map(str, c)) + ")" if c else "-"

        return "(" + ", ".join("(" + ",".join(fmt(c) for c in row) + ")" for row in self.components) + ")"


def _as_composition(parts: Iterable[int]) -> Composition:
    comp = Composition(parts)
    return Partition(comp) if comp.is_partition() else comp


def _weak_compositions(n: int, slots: int):
    if slots == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _weak_compositions(n - first, slots - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_rd_partitions(r: int, d: int, n: int) -> tuple[RDPartition, ...]:
    """All (r,d)-partitions of n.

    Sizes are distributed over the positions in (k, l) order, with the most mass in the
    earliest positions first; within a size distribution each component runs through
    its partitions from (m) down to (1^m).
    """
    if r < 1 or d < 1 or n < 0:
        raise ValueError(f"invalid (r, d, n) = ({r}, {d}, {n})")
    out = []
    for sizes in _weak_compositions(n, r * d):
        stack = [[]]
        for size in sizes:
            stack = [prefix + [p] for prefix in stack for p in integer_partitions(size)]
        for flat in stack:
            out.append(RDPartition([flat[k * d : (k + 1) * d] for k in range(r)]))
    return tuple(out)


def _cumulative_profile(lam: RDPartition, depth: dict) -> list[int]:
    out, total = [], 0
    for (k, l), comp in zip(lam.positions(), lam.flattened()):
        out.append(total)
        for p in range(1, depth[(k, l)] + 1):
            out.append(total + sum(comp[:p]))
        total += comp.size
    return out


def dominates(lam: RDPartition, mu: RDPartition) -> bool:
    """lam dominates mu: every cumulative sum over (k, l, p) of lam is at least mu's."""
    if (lam.r, lam.d) != (mu.r, mu.d):
        raise ValueError("dominance needs shapes with the same (r, d)")
    if lam.size != mu.size:
        raise ValueError("dominance needs shapes of the same size")
    depth = {
        (k, l): max(len(lam.component(k, l)), len(mu.component(k, l)))
        for k, l in lam.positions()
    }
    return all(
        a >= b for a, b in zip(_cumulative_profile(lam, depth), _cumulative_profile(mu, depth))
    )


def addable_removable(lam: RDPartition) -> tuple[list[RDNode], list[RDNode]]:
    """Nodes that can be added to / removed from ``lam`` leaving an (r,d)-partition."""
    if not lam.is_partition():
        raise ValueError(f"{lam} is not an (r,d)-partition")
    addable, removable = [], []
    for k, l in lam.positions():
        comp = Partition(lam.component(k, l))
        addable.extend(RDNode(a, b, k, l) for a, b in comp.addable())
        removable.extend(RDNode(a, b, k, l) for a, b in comp.removable())
    return addable, removable


def hook_length(lam: RDPartition, node: RDNode) -> int:
    """lambda_x + lambda'_y - x - y + 1 inside the component holding ``node``."""
    if not lam.contains(node):
        raise ValueError(f"node {node} is not in {lam}")
    comp = lam.component(node.k, node.l)
    return comp.part(node.row) + comp.conjugate().part(node.col) - node.row - node.col + 1


def generalized_hook(lam: RDPartition, node: RDNode, mu: Sequence[int]) -> int:
    """lambda_x + mu'_y - x - y + 1, the hook of ``node`` against the partition ``mu``."""
    if not lam.contains(node):
        raise ValueError(f"node {node} is not in {lam}")
    comp = lam.component(node.k, node.l)
    mu_conj = Partition(mu).conjugate()
    return comp.part(node.row) + mu_conj.part(node.col) - node.row - node.col + 1


class SetPartition:
    """A set partition of {1..n}; blocks are kept sorted by their minima."""

    __slots__ = ("n", "blocks")

    def __init__(self, blocks: Iterable[Iterable[int]], n: int | None = None):
        blocks = [tuple(sorted(int(x) for x in b)) for b in blocks]
        blocks = sorted((b for b in blocks if b), key=lambda b: b[0])
        union = sorted(x for b in blocks for x in b)
        size = len(union) if n is None else n
        if union != list(range(1, size + 1)):
            raise ValueError(f"blocks {blocks} do not partition 1..{size}")
        self.n = size
        self.blocks = tuple(blocks)

    def act(self, w: Permutation) -> "SetPartition":
        """The right action Aw = {Iw : I in A}."""
        if len(w) != self.n:
            raise ValueError(f"cannot act with S_{len(w)} on a set partition of {self.n}")
        return SetPartition([[w(x) for x in b] for b in self.blocks], self.n)

    def pairs(self) -> list[tuple[int, int]]:
        """All (i, j) with i < j lying in a common block."""
        return [(b[x], b[y]) for b in self.blocks for x in range(len(b)) for y in range(x + 1, len(b))]

    def block_of(self, i: int) -> tuple[int, ...]:
        return next(b for b in self.blocks if i in b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({[list(b) for b in self.blocks]})"


def set_partition_of(lam: RDPartition) -> SetPartition:
    """A_lambda: consecutive blocks of sizes |lambda^(k)| over the nonempty r-components."""
    blocks, start = [], 1
    for size in lam.r_sizes():
        if size:
            blocks.append(range(start, start + size))
            start += size
    return SetPartition(blocks, lam.size)
