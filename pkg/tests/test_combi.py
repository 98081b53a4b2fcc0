import math

import pytest

from yokonuma.combi import (
    Permutation,
    RDNode,
    RDPartition,
    RDTableau,
    SetPartition,
    addable_removable,
    content_and_position,
    coset_rep,
    dominates,
    dominates_tableau,
    enumerate_rd_partitions,
    generalized_hook,
    hook_length,
    initial_tableau,
    integer_partitions,
    row_standard_tableaux,
    standard_tableaux,
    symmetric_group,
    young_subgroup,
)
from yokonuma.fields import Cyclotomic


def test_integer_partitions():
    assert [list(p) for p in integer_partitions(4)] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert len(integer_partitions(6)) == 11


@pytest.mark.parametrize("r, d, n", [(1, 1, 3), (2, 1, 2), (1, 2, 3), (2, 2, 2), (2, 2, 3)])
def test_sum_of_squares(r, d, n):
    total = sum(len(standard_tableaux(lam)) ** 2 for lam in enumerate_rd_partitions(r, d, n))
    assert total == (r * d) ** n * math.factorial(n)


def test_enumeration_is_distinct():
    shapes = enumerate_rd_partitions(2, 2, 3)
    assert len(shapes) == len(set(shapes))
    assert all(lam.size == 3 and lam.is_partition() for lam in shapes)


def test_invalid_enumeration():
    with pytest.raises(ValueError):
        enumerate_rd_partitions(0, 1, 2)


def test_addable_removable():
    lam = RDPartition([[(2, 1), ()]])
    addable, removable = addable_removable(lam)
    assert set(removable) == {RDNode(1, 2, 1, 1), RDNode(2, 1, 1, 1)}
    assert RDNode(1, 1, 1, 2) in addable
    assert RDNode(1, 3, 1, 1) in addable
    assert RDNode(3, 1, 1, 1) in addable
    assert len(addable) == 4


def test_hook_lengths():
    lam = RDPartition([[(3, 1)]])
    assert [hook_length(lam, node) for node in lam.nodes()] == [4, 2, 1, 1]
    # hook against the empty partition counts the arm only
    assert generalized_hook(lam, RDNode(1, 1, 1, 1), ()) == 3 + 0 - 1 - 1 + 1


def test_dominance():
    a = RDPartition([[(2,), ()]])
    b = RDPartition([[(1, 1), ()]])
    c = RDPartition([[(1,), (1,)]])
    assert dominates(a, b) and dominates(b, c) and dominates(a, c)
    assert not dominates(c, a)
    with pytest.raises(ValueError):
        dominates(a, RDPartition([[(1,), ()]]))


def test_tableau_restriction_and_removal():
    shape = RDPartition([[(2,), ()], [(1,), (1,)]])
    t = RDTableau(
        shape,
        [RDNode(1, 1, 1, 1), RDNode(1, 1, 2, 1), RDNode(1, 2, 1, 1), RDNode(1, 1, 2, 2)],
    )
    assert t.is_standard()
    assert t.restrict(2) == RDPartition([[(1,), ()], [(1,), ()]])
    u = t.remove_last()
    assert u.size == 3
    assert u.add(RDNode(1, 1, 2, 2)) == t
    assert RDTableau.from_json(t.to_json()) == t


def test_initial_tableau_dominates_standard_tableaux():
    for lam in enumerate_rd_partitions(2, 1, 3):
        initial = initial_tableau(lam)
        assert all(dominates_tableau(initial, t) for t in standard_tableaux(lam))


def test_row_standard_count():
    lam = RDPartition([[(2, 1)]])
    # 3!/(2!1!) fillings of the rows
    assert len(row_standard_tableaux(lam)) == 3
    assert len(standard_tableaux(lam)) == 2


def test_coset_rep_of_initial_tableau_is_identity():
    lam = RDPartition([[(2,), (1,)]])
    w, word = coset_rep(initial_tableau(lam))
    assert w.is_identity() and word == ()
    for t in row_standard_tableaux(lam):
        w, word = coset_rep(t)
        assert initial_tableau(lam).act(w) == t
        assert len(word) == w.length()


def test_contents():
    q = Cyclotomic.from_rational(2, 2)
    v = (Cyclotomic.from_rational(1, 2), Cyclotomic.from_rational(5, 2))
    shape = RDPartition([[(2,), ()], [(1,), (1,)]])
    t = RDTableau(
        shape,
        [RDNode(1, 1, 1, 1), RDNode(1, 1, 2, 1), RDNode(1, 2, 1, 1), RDNode(1, 1, 2, 2)],
    )
    assert content_and_position(t, 1, q, v) == (1, 1)
    assert content_and_position(t, 3, q, v) == (4, 1)
    assert content_and_position(t, 4, q, v) == (5, 2)


def test_permutations():
    n = 4
    group = symmetric_group(n)
    assert len(group) == 24
    for w in group[:10]:
        assert Permutation.from_word(w.reduced_word(), n) == w
        assert (w * w.inverse()).is_identity()
    s1 = Permutation.simple(1, 3)
    assert s1.extend(4) == Permutation([2, 1, 3, 4])
    assert len(young_subgroup([2, 2])) == 4
    with pytest.raises(IndexError):
        Permutation.simple(3, 3)


def test_set_partition_action():
    a = SetPartition([[1, 3], [2]])
    w = Permutation([2, 3, 1])
    assert a.act(w) == SetPartition([[2, 1], [3]])
    assert a.pairs() == [(1, 3)]
    with pytest.raises(ValueError):
        SetPartition([[1, 3]])
