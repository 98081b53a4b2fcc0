import os

import pytest

from yokonuma.cellular import (
    annihilation_checks,
    cellular_basis,
    column_shapes,
    framing_subalgebra_checks,
    lemma_checks,
    murphy_checks,
    murphy_m_st,
    row_standard_expansion,
    verify_cellularity,
    verify_jm,
)
from yokonuma.combi import RDPartition, enumerate_rd_partitions, initial_tableau
from yokonuma.errors import SizeLimitError
from yokonuma.kernel import AlgebraContext

slow = pytest.mark.skipif(not os.environ.get("YOKONUMA_SLOW"), reason="set YOKONUMA_SLOW=1")

SMALL = [(1, 3, 1), (2, 2, 1), (1, 2, 2), (2, 2, 2)]


def build(r, n, d):
    return AlgebraContext.from_params(r=r, n=n, d=d, q="2", v="1" if d == 1 else "1,5")


def assert_ok(checks):
    failed = [c.to_json() for c in checks if not c.ok]
    assert not failed, failed[:3]


@pytest.mark.parametrize("r, n, d", SMALL)
def test_cellularity(r, n, d):
    basis = cellular_basis(build(r, n, d))
    assert len(basis) == basis.context.dimension
    assert_ok(verify_cellularity(basis))


@pytest.mark.parametrize("r, n, d", SMALL)
def test_jm_triangularity(r, n, d):
    assert_ok(verify_jm(cellular_basis(build(r, n, d))))


@pytest.mark.parametrize("r, n, d", [(2, 2, 2), (2, 2, 1)])
def test_lemma_level_identities(r, n, d):
    basis = cellular_basis(build(r, n, d))
    assert_ok(lemma_checks(basis))
    assert_ok(annihilation_checks(basis))
    assert_ok(row_standard_expansion(basis, limit=50))


@pytest.mark.parametrize("r, n, d", [(2, 2, 2), (2, 3, 1), (1, 2, 2)])
def test_framing_subalgebra(r, n, d):
    context = build(r, n, d)
    checks, coefficients = framing_subalgebra_checks(context)
    assert_ok(checks)
    assert coefficients


def test_column_shapes():
    shapes = column_shapes(2, 2, 2)
    assert RDPartition([[(), (1, 1)], [(), ()]]) in shapes
    assert RDPartition([[(), (1,)], [(), (1,)]]) in shapes
    assert len(shapes) == 3


@pytest.mark.parametrize("shape", enumerate_rd_partitions(2, 2, 2))
def test_murphy_factorizations(shape):
    assert_ok(murphy_checks(build(2, 2, 2), shape))


def test_star_swaps_the_tableaux():
    context = build(2, 2, 2)
    basis = cellular_basis(context)
    for e in basis.elements:
        assert e.value.star() == basis[(e.t, e.s)]


def test_initial_pair_is_m_lambda():
    context = build(2, 2, 2)
    shape = RDPartition([[(1,), (1,)], [(), ()]])
    t = initial_tableau(shape)
    assert murphy_m_st(context, t, t).value == cellular_basis(context).data[shape].m


def test_size_guard():
    with pytest.raises(SizeLimitError):
        cellular_basis(build(2, 2, 2), max_dimension=8)


@slow
def test_cellularity_rank_three():
    basis = cellular_basis(build(2, 3, 2))
    assert_ok(verify_cellularity(basis))
    assert_ok(verify_jm(basis))
