"""(r,d)-tableaux: row standard and standard fillings, dominance and contents."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from yokonuma.combi.partition import (
    Composition,
    RDNode,
    RDPartition,
    addable_removable,
    dominates,
)
from yokonuma.combi.permutation import Permutation
from yokonuma.fields import Cyclotomic

__all__ = [
    "RDTableau",
    "content_and_position",
    "coset_rep",
    "dominates_tableau",
    "initial_tableau",
    "row_standard_tableaux",
    "standard_tableaux",
]


class RDTableau:
    """A filling of the nodes of an (r,d)-composition by 1..n.

    Args:
        shape: the (r,d)-composition being filled
        nodes: ``nodes[i-1]`` is the node holding the entry i
    """

    __slots__ = ("shape", "nodes", "_hash")

    def __init__(self, shape: RDPartition, nodes: Sequence[RDNode]):
        nodes = tuple(RDNode(*node) for node in nodes)
        if sorted(nodes) != sorted(shape.nodes()):
            raise ValueError(f"filling does not cover the nodes of {shape}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "_hash", hash((shape, nodes)))

    def __setattr__(self, name, value):
        raise AttributeError("RDTableau is immutable")

    @property
    def size(self) -> int:
        return len(self.nodes)

    def node(self, i: int) -> RDNode:
        if not 1 <= i <= self.size:
            raise IndexError(f"entry {i} outside 1..{self.size}")
        return self.nodes[i - 1]

    def entry_at(self, node: RDNode) -> int:
        return self.nodes.index(node) + 1

    def rows(self) -> dict[tuple, list[int]]:
        """Entries of every row, keyed by (k, l, row), in column order."""
        out: dict[tuple, list[int]] = {}
        for i, node in sorted(enumerate(self.nodes, start=1), key=lambda x: x[1]):
            out.setdefault((node.k, node.l, node.row), []).append(i)
        return out

    def is_row_standard(self) -> bool:
        by_node = {node: i for i, node in enumerate(self.nodes, start=1)}
        return all(
            by_node[node] < by_node[RDNode(node.row, node.col + 1, node.k, node.l)]
            for node in self.nodes
            if RDNode(node.row, node.col + 1, node.k, node.l) in by_node
        )

    def is_standard(self) -> bool:
        if not self.shape.is_partition() or not self.is_row_standard():
            return False
        by_node = {node: i for i, node in enumerate(self.nodes, start=1)}
        return all(
            by_node[node] < by_node[RDNode(node.row + 1, node.col, node.k, node.l)]
            for node in self.nodes
            if RDNode(node.row + 1, node.col, node.k, node.l) in by_node
        )

    def restrict(self, k: int) -> RDPartition:
        """shape(t|k): the (r,d)-composition occupied by the entries 1..k."""
        rows = [[[0] * len(self.shape.component(kk, ll)) for ll in range(1, self.shape.d + 1)]
                for kk in range(1, self.shape.r + 1)]
        for node in self.nodes[:k]:
            rows[node.k - 1][node.l - 1][node.row - 1] += 1
        return RDPartition([[Composition(c) for c in row] for row in rows])

    def remove_last(self) -> "RDTableau":
        """The tableau of size n-1 left after deleting the entry n."""
        if not self.nodes:
            raise ValueError("cannot remove from the empty tableau")
        last = self.nodes[-1]
        return RDTableau(self.shape.remove_node(last), self.nodes[:-1])

    def add(self, node: RDNode) -> "RDTableau":
        """Places the entry n+1 at ``node``."""
        return RDTableau(self.shape.add_node(node), self.nodes + (node,))

    def act(self, w: Permutation) -> "RDTableau":
        """The right action t w: the entry i is replaced by (i)w."""
        nodes = [None] * self.size
        for i, node in enumerate(self.nodes, start=1):
            nodes[w(i) - 1] = node
        return RDTableau(self.shape, nodes)

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "nodes": [list(node) for node in self.nodes]}

    @classmethod
    def from_json(cls, data: dict) -> "RDTableau":
        return cls(RDPartition.from_json(data["shape"]), [RDNode(*n) for n in data["nodes"]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RDTableau):
            return NotImplemented
        return self.shape == other.shape and self.nodes == other.nodes

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"RDTableau({self})"

    def __str__(self) -> str:
        rows = self.rows()
        comps = []
        for k in range(1, self.shape.r + 1):
            inner = []
            for l in range(1, self.shape.d + 1):
                lines = [
                    " ".join(map(str, rows[(k, l, a)]))
                    for a in range(1, len(self.shape.component(k, l)) + 1)
                ]
                inner.append(" / ".join(lines) if lines else "-")
            comps.append("(" + ", ".join(inner) + ")")
        return "(" + ", ".join(comps) + ")"


@lru_cache(maxsize=None)
def initial_tableau(shape: RDPartition) -> RDTableau:
    """t^lambda: 1..n along the rows, component by component in (k, l) order."""
    return RDTableau(shape, shape.nodes())


@lru_cache(maxsize=None)
def standard_tableaux(shape: RDPartition) -> tuple[RDTableau, ...]:
    """Std(lambda), built by placing n in each removable node in turn."""
    if not shape.is_partition():
        raise ValueError(f"{shape} is not an (r,d)-partition")
    if shape.size == 0:
        return (RDTableau(shape, ()),)
    out = []
    for node in addable_removable(shape)[1]:
        for smaller in standard_tableaux(shape.remove_node(node)):
            out.append(smaller.add(node))
    return tuple(sorted(out, key=lambda t: coset_rep(t)[0]))


@lru_cache(maxsize=None)
def row_standard_tableaux(shape: RDPartition) -> tuple[RDTableau, ...]:
    """All row standard tableaux of an (r,d)-composition."""
    rows = [(node.k, node.l, node.row) for node in shape.nodes()]
    row_keys = list(dict.fromkeys(rows))
    lengths = [rows.count(key) for key in row_keys]
    shape_nodes = shape.nodes()

    def fill(remaining: tuple, index: int):
        if index == len(row_keys):
            yield []
            return
        for chosen in combinations(remaining, lengths[index]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in fill(rest, index + 1):
                yield [chosen] + tail

    out = []
    for assignment in fill(tuple(range(1, shape.size + 1)), 0):
        nodes = [None] * shape.size
        position = 0
        for entries in assignment:
            for entry in entries:
                nodes[entry - 1] = shape_nodes[position]
                position += 1
        out.append(RDTableau(shape, nodes))
    return tuple(sorted(out, key=lambda t: coset_rep(t)[0]))


def dominates_tableau(s: RDTableau, t: RDTableau) -> bool:
    """s dominates t: shape(s|k) dominates shape(t|k) for every k."""
    if s.size != t.size:
        raise ValueError("tableau dominance needs tableaux of the same size")
    return all(dominates(s.restrict(k), t.restrict(k)) for k in range(1, s.size + 1))


@lru_cache(maxsize=None)
def coset_rep(t: RDTableau) -> tuple[Permutation, tuple[int, ...]]:
    """d(t) with t = t^lambda d(t), and a reduced word for it."""
    if not t.is_row_standard():
        raise ValueError(f"{t} is not row standard")
    initial = initial_tableau(t.shape)
    images = [t.entry_at(node) for node in initial.nodes]
    w = Permutation(images)
    return w, w.reduced_word()


def content_and_position(
    t: RDTableau, i: int, q: Cyclotomic, v: Sequence[Cyclotomic]
) -> tuple[Cyclotomic, int]:
    """c_t(i) = v_l q^(2(b-a)) for the node ((a, b), k, l) holding i, and its r-position k."""
    node = t.node(i)
    return v[node.l - 1] * q ** (2 * (node.col - node.row)), node.k
