import os

import pytest

from yokonuma.combi import RDNode, RDPartition, RDTableau, standard_tableaux
from yokonuma.errors import SemisimplicityError
from yokonuma.fields import Cyclotomic
from yokonuma.kernel import AlgebraContext
from yokonuma.semisimple import (
    all_standard_tableaux,
    centralizer_dimension,
    corner_dimension,
    criterion_factors,
    extract_gamma,
    idempotent_inductive,
    idempotent_interpolation,
    inductive_checks,
    jm_subalgebra,
    position_projector,
    require_semisimple,
    semisimplicity_criterion,
    seminormal_basis,
    sum_formula_checks,
    vanishing_factors,
    verify_seminormal,
)

slow = pytest.mark.skipif(not os.environ.get("YOKONUMA_SLOW"), reason="set YOKONUMA_SLOW=1")


def build(r, n, d, v=None):
    v = v or ("1" if d == 1 else "1,5")
    return AlgebraContext.from_params(r=r, n=n, d=d, q="2", v=v)


def assert_ok(checks):
    failed = [c.to_json() for c in checks if not c.ok]
    assert not failed, failed[:3]


def test_criterion_accepts_and_rejects():
    assert semisimplicity_criterion(build(2, 2, 2))
    assert not semisimplicity_criterion(build(2, 2, 2, v="1,4"))
    assert vanishing_factors(build(2, 2, 2).q, build(2, 2, 2, v="1,4").v, 2) == ["q^2 v1 - v2"]
    # the same parameters pass on one strand
    assert semisimplicity_criterion(build(2, 1, 2, v="1,4"))


def test_criterion_at_fourth_root_of_unity():
    i = Cyclotomic.root_of_unity(4)
    labels = [f.label for f in criterion_factors(i, [Cyclotomic.one(4)], 2) if not f.value]
    assert labels == ["[2]_(q^2)"]


def test_gate_raises():
    context = build(2, 2, 2, v="1,4")
    with pytest.raises(SemisimplicityError):
        require_semisimple(context)
    t = all_standard_tableaux(2, 2, 2)[0]
    with pytest.raises(SemisimplicityError):
        idempotent_interpolation(context, t)


@pytest.mark.parametrize("r, n, d", [(1, 3, 1), (2, 2, 1), (1, 2, 2), (2, 2, 2)])
def test_idempotents_resolve_identity(r, n, d):
    context = build(r, n, d)
    idempotents = [idempotent_interpolation(context, t) for t in all_standard_tableaux(r, d, n)]
    total = context.zero()
    for x in idempotents:
        total = total + x
    assert total == context.one()
    for x in idempotents:
        assert x * x == x


@pytest.mark.parametrize("r, n, d", [(1, 3, 1), (2, 2, 2)])
def test_inductive_matches_interpolation(r, n, d):
    assert_ok(inductive_checks(build(r, n, d)))


def test_eigenvalues_of_an_idempotent():
    context = build(2, 2, 2)
    shape = RDPartition([[(1,), ()], [(), (1,)]])
    for t in standard_tableaux(shape):
        E = idempotent_interpolation(context, t)
        for k in (1, 2):
            node = t.node(k)
            c = context.v[node.l - 1] * context.q ** (2 * node.classical_content)
            assert context.X(k) * E == E.scale(c)
            assert context.t(k) * E == E.scale(context.zeta(node.k))


@pytest.mark.parametrize("r, n, d", [(2, 2, 2), (1, 3, 1)])
def test_sum_formula(r, n, d):
    context = build(r, n, d)
    for u in all_standard_tableaux(r, d, n - 1):
        assert_ok(sum_formula_checks(context, u))


def test_position_projectors_sum_to_one():
    context = build(2, 2, 2)
    total = position_projector(context, 1, 1) + position_projector(context, 1, 2)
    assert total == context.one()
    p = position_projector(context, 2, 2)
    assert p * p == p


def test_smaller_tableau_lives_in_the_subalgebra():
    context = build(2, 2, 2)
    t = RDTableau(RDPartition([[(), ()], [(1,), ()]]), [RDNode(1, 1, 2, 1)])
    E = idempotent_interpolation(context, t)
    assert E == context.embed(idempotent_interpolation(build(2, 1, 2), t))


@pytest.mark.parametrize("r, n, d", [(2, 2, 2), (1, 3, 1), (2, 2, 1)])
def test_seminormal_suite(r, n, d):
    context = build(r, n, d)
    checks = verify_seminormal(context, centralizer_limit=64)
    assert_ok(checks)
    assert {c.axiom for c in checks} >= {"i", "ii", "iii", "v"}
    primitive = [c for c in checks if c.name == "primitive"]
    assert 0 < len(primitive) <= 4


def test_corners_of_idempotents():
    context = build(2, 2, 1)
    tableaux = list(all_standard_tableaux(2, 1, 2))
    E = {t: idempotent_interpolation(context, t) for t in tableaux}
    assert all(corner_dimension(context, x) == 1 for x in E.values())
    s = tableaux[0]
    t = next(u for u in tableaux if u.shape != s.shape)
    assert corner_dimension(context, E[s] + E[t]) == 2
    assert corner_dimension(context, context.one()) == context.dimension


def test_gamma_and_seminormal_units():
    context = build(2, 2, 2)
    datum = seminormal_basis(context)
    assert len(datum) == context.dimension
    assert all(g for g in datum.gamma.values())
    t = next(iter(datum.idempotents))
    assert extract_gamma(datum.units[(t, t)]) == datum.gamma[t]
    assert extract_gamma(context.zero()) is None


def test_jm_subalgebra_and_centralizer():
    context = build(1, 3, 1)
    echelon, found = jm_subalgebra(context)
    count = len(all_standard_tableaux(1, 1, 3))
    assert echelon.rank == count == len(found)
    assert centralizer_dimension(context) == count


def test_inductive_cache_is_per_context():
    a, b = build(2, 2, 2), build(2, 2, 2, v="1,7")
    t = all_standard_tableaux(2, 2, 2)[0]
    assert idempotent_inductive(a, t).context is a
    assert idempotent_inductive(b, t).context is b


@slow
def test_seminormal_suite_rank_three():
    assert_ok(verify_seminormal(build(2, 3, 2), probe_pairs=200))
