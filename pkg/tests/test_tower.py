import pytest

from yokonuma.errors import SizeLimitError
from yokonuma.kernel import (
    AlgebraContext,
    frobenius_check,
    frobenius_gram,
    theta_checks,
    theta_nondegeneracy,
    theta_projection,
    tower_decomposition_check,
    trace,
)
from yokonuma.kernel.tower import tower


def build(r, n, d):
    return AlgebraContext.from_params(r=r, n=n, d=d, q="2", v="1" if d == 1 else "1,5")


@pytest.mark.parametrize("r, n, d", [(1, 1, 1), (2, 1, 1), (1, 1, 2), (2, 1, 2), (1, 2, 1), (2, 2, 1)])
def test_tower_decomposition(r, n, d):
    checks = tower_decomposition_check(build(r, n, d), samples=5)
    assert all(c.ok for c in checks), [c.to_json() for c in checks if not c.ok]
    assert any(c.name == "tower_rank" for c in checks)


@pytest.mark.parametrize("r, n, d", [(1, 1, 2), (2, 1, 2), (2, 1, 1)])
def test_theta(r, n, d):
    base = build(r, n, d)
    checks = theta_checks(base, samples=5)
    checks.append(theta_nondegeneracy(base))
    assert all(c.ok for c in checks), [c.to_json() for c in checks if not c.ok]


def test_theta_projection_fixes_the_base():
    base, big = build(2, 1, 2), build(2, 2, 2)
    x = base.X(1) + base.t(1)
    assert theta_projection(big.embed(x)) == x


@pytest.mark.parametrize("r, d", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_frobenius_gram_is_nonsingular(r, d):
    checks = frobenius_check(build(r, 2, d))
    assert all(c.ok for c in checks)


def test_trace_of_one():
    context = build(2, 2, 2)
    assert trace(context.one()) == 1


def test_gram_size_guard():
    with pytest.raises(SizeLimitError):
        frobenius_gram(build(2, 2, 2), max_dimension=10)


@pytest.mark.parametrize("r, d", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_tower_from_no_strands(r, d):
    base = build(r, 0, d)
    checks = tower_decomposition_check(base, samples=5)
    assert all(c.ok for c in checks), [c.to_json() for c in checks if not c.ok]
    (rank,) = [c for c in checks if c.name == "tower_rank"]
    assert rank.instance["expected"] == r * d
    decomposition = tower(base)
    big = decomposition.big
    assert big.n == 1 and big.dimension == r * d
    for label, c in decomposition.cosets.items():
        assert label.j == 1
        assert c == big.X(1, label.a) * big.t(1, label.b)
    checks = theta_checks(base, samples=5)
    checks.append(theta_nondegeneracy(base))
    assert all(c.ok for c in checks), [c.to_json() for c in checks if not c.ok]


@pytest.mark.parametrize("n", [0, 1])
def test_trace_and_gram_on_small_ranks(n):
    context = build(2, n, 2)
    assert trace(context.one()) == 1
    assert all(c.ok for c in frobenius_check(context))
