import math

import pytest

from yokonuma.errors import ContextMismatchError, SchemaError
from yokonuma.kernel import (
    AlgebraContext,
    SPECIAL_REGISTRY,
    audit_basis,
    make_special,
    set_idempotent,
    verify_defining_relations,
)
from yokonuma.kernel.context import CONTEXT_CACHE_SIZE
from yokonuma.kernel.relations import _set_partitions, verify_set_idempotents
from yokonuma.kernel.words import identity_word
from yokonuma.tasks.report import SKIP

PARAMETERS = {1: ["1", "3"], 2: ["1,5", "-2,3"]}


def build(r, n, d, q="2", v=None):
    v = PARAMETERS[d][0] if v is None else v
    return AlgebraContext.from_params(r=r, n=n, d=d, q=q, v=v)


@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("d", [1, 2])
@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("choice", [0, 1])
def test_defining_relations(r, d, n, choice):
    q = "2" if choice == 0 else "3/2"
    context = build(r, n, d, q=q, v=PARAMETERS[d][choice])
    checks = verify_defining_relations(context)
    failed = [c.to_json() for c in checks if not c.ok]
    assert not failed, failed


@pytest.mark.parametrize("r, n, d", [(1, 3, 1), (2, 2, 1), (1, 2, 2), (2, 2, 2), (3, 2, 1)])
def test_dimension(r, n, d):
    context = build(r, n, d, v="1" if d == 1 else "1,5")
    assert context.dimension == (r * d) ** n * math.factorial(n)
    assert len(list(context.basis_words())) == context.dimension


@pytest.mark.parametrize("r, n, d", [(2, 2, 2), (1, 3, 2), (2, 3, 1)])
def test_basis_audit(r, n, d):
    context = build(r, n, d)
    checks = audit_basis(context, samples=30, seed=7)
    assert all(c.ok for c in checks), [c.to_json() for c in checks if not c.ok]


def test_contexts_are_cached():
    assert build(2, 2, 2) is build(2, 2, 2)
    assert build(2, 2, 2).with_n(3) is build(2, 3, 2)


def test_invalid_parameters():
    with pytest.raises(SchemaError):
        AlgebraContext.from_params(r=1, n=2, d=2, q="2", v="1")
    with pytest.raises(SchemaError):
        AlgebraContext.from_params(r=1, n=2, d=1, q="0", v="1")
    with pytest.raises(SchemaError):
        AlgebraContext.from_params(r=1, n=2, d=1, q=1.5, v="1")
    with pytest.raises(SchemaError):
        AlgebraContext.from_params(r=1, n=2, d=1, q="2", v="0")


def test_generator_index_range():
    context = build(2, 2, 2)
    with pytest.raises(IndexError):
        context.g(2)
    with pytest.raises(IndexError):
        context.X(3)


def test_cyclotomic_relation_and_inverse():
    context = build(2, 2, 2)
    X1 = context.X(1)
    assert (X1 - 1) * (X1 - 5) == context.zero()
    assert X1 * context.X_inverse(1) == context.one()
    assert context.X(2) == context.g(1) * X1 * context.g(1)


def test_star_anti_involution():
    context = build(2, 2, 2)
    x = context.word([1, 0], [1, 0], [2, 1]) + context.t(2) * 3
    y = context.X(2) + context.g(1)
    assert (x * y).star() == y.star() * x.star()
    assert x.star().star() == x
    assert context.g(1).star() == context.g(1)
    assert context.X(2).star() == context.X(2)


def test_vector_round_trip():
    context = build(2, 2, 2)
    x = context.X(2) * context.g(1) + context.t(1)
    assert context.from_vector(context.vector(x)) == x


def test_embedding():
    small, big = build(2, 2, 2), build(2, 3, 2)
    x = small.g(1) * small.X(2)
    assert big.embed(x) == big.g(1) * big.X(2)
    assert big.embed(small.one()) == big.one()
    with pytest.raises(ContextMismatchError):
        small.embed(big.one())


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        build(2, 2, 2).one() + build(1, 2, 2).one()


def test_special_elements():
    context = build(2, 3, 2)
    E = set_idempotent(context, [[1, 2], [3]])
    assert E == context.e(1, 2)
    assert make_special(context, "E", [[1, 2, 3]]) == context.e(1, 2) * context.e(2, 3)
    u = make_special(context, "u", 1, 1)
    assert u * u == u.scale(context.zeta(1) - context.zeta(2))
    assert set(SPECIAL_REGISTRY) >= {"one", "t", "g", "e", "E", "X", "u"}
    with pytest.raises(ValueError):
        make_special(context, "nothing")


def test_set_idempotents():
    context = build(2, 3, 1, v="1")
    checks = verify_set_idempotents(context)
    assert all(c.ok for c in checks)
    assert sum(c.name == "g_w_E_A" for c in checks) == 5 * 6
    assert not any(c.status == SKIP for c in checks)


def test_capped_set_idempotents_report_the_rest():
    context = build(2, 3, 1, v="1")
    checks = verify_set_idempotents(context, limit=20)
    skipped = [c for c in checks if c.status == SKIP]
    assert len(skipped) == 1
    assert skipped[0].instance == {"checked": 20, "pairs": 30}
    assert sum(c.name == "g_w_E_A" and c.status != SKIP for c in checks) == 20
    assert all(c.ok for c in checks)


@pytest.mark.parametrize("n, bell", [(1, 1), (2, 2), (3, 5), (4, 15)])
def test_set_partitions(n, bell):
    partitions = _set_partitions(n)
    assert len(partitions) == bell
    assert len({tuple(A.blocks) for A in partitions}) == bell
    assert all(A.n == n for A in partitions)


@pytest.mark.parametrize("r, d", [(1, 1), (2, 1), (1, 2), (3, 2)])
def test_algebra_on_no_strands(r, d):
    context = build(r, 0, d, v="1" if d == 1 else "1,5")
    assert context.dimension == 1
    assert list(context.basis_words()) == [identity_word(0)]
    assert context.bootstrap_report() == []
    one = context.one()
    assert one * one == one
    assert context.constant(3) * context.constant(2) == context.constant(6)
    assert context.vector(one) == {0: 1}
    with pytest.raises(IndexError):
        context.X(1)
    checks = verify_defining_relations(context)
    assert all(c.ok for c in checks)
    checks = audit_basis(context, samples=5)
    assert [c.name for c in checks] == ["word_count"] and checks[0].ok
    assert build(r, 1, d, v="1" if d == 1 else "1,5").with_n(0) is context


def test_context_cache_is_bounded():
    first = build(1, 1, 1, q="2/7", v="1")
    assert build(1, 1, 1, q="2/7", v="1") is first
    for k in range(CONTEXT_CACHE_SIZE):
        build(1, 1, 1, q=str(k + 3), v="1")
    info = AlgebraContext.cache_info()
    assert info.maxsize == CONTEXT_CACHE_SIZE
    assert info.currsize <= CONTEXT_CACHE_SIZE
    assert build(1, 1, 1, q="2/7", v="1") is not first
