import os

from fractions import Fraction

import pytest

from yokonuma.errors import PoleError, SemisimplicityError
from yokonuma.fields import ScalarPoly
from yokonuma.fusion import (
    EXAMPLE_SHAPE,
    EXAMPLE_TABLEAU,
    AlgPoly,
    AlgRatFun,
    baxterized_g,
    baxterized_value,
    evaluate_with_cancellation,
    example_checks,
    example_prefactor,
    fusion_checks,
    fusion_idempotent,
    fusion_prefactor,
    fusion_trace,
    lemma_check,
    phi_one,
    quantum_integer,
    regularity_checks,
    resolvent,
    sum_function_check,
    unitarity_checks,
    variable,
    yang_baxter_checks,
)
from yokonuma.kernel import AlgebraContext
from yokonuma.semisimple import all_standard_tableaux, idempotent_interpolation

slow = pytest.mark.skipif(not os.environ.get("YOKONUMA_SLOW"), reason="set YOKONUMA_SLOW=1")


def build(r, n, d, v=None):
    v = v or ("1" if d == 1 else "1,5")
    return AlgebraContext.from_params(r=r, n=n, d=d, q="2", v=v)


def assert_ok(checks):
    failed = [c.to_json() for c in checks if not c.ok]
    assert not failed, failed[:3]


def test_cancellation_of_a_removable_pole():
    context = build(2, 2, 2)
    u = variable(context)
    x = context.g(1) + context.t(1)
    # (u - 3)(u - 1) x / ((u - 3)(u - 2)) at u = 3 is 2 x
    f = AlgRatFun(AlgPoly.from_scalar(ScalarPoly.from_roots([3, 1], context.order), x),
                  ScalarPoly.from_roots([3, 2], context.order))
    assert f.den == ScalarPoly.linear(2, context.order)
    assert evaluate_with_cancellation(f, 3) == x.scale(2)
    assert f(4) == x.scale(Fraction(3, 2))
    with pytest.raises(PoleError) as info:
        evaluate_with_cancellation(f, 2, step=5)
    assert info.value.step == 5
    assert info.value.multiplicity == 1 and info.value.cancelled == 0
    assert (u - 2) * f == AlgRatFun(AlgPoly.from_scalar(u - 1, x))


def test_algebra_valued_cancellation_needs_every_coefficient():
    context = build(2, 2, 2)
    u = variable(context)
    # (u - 1) g + (u - 2) t over (u - 1): not divisible, the pole is genuine
    num = AlgPoly.from_scalar(u - 1, context.g(1)) + AlgPoly.from_scalar(u - 2, context.t(1))
    f = AlgRatFun(num, ScalarPoly.linear(1, context.order))
    with pytest.raises(PoleError):
        evaluate_with_cancellation(f, 1)


def test_resolvent():
    context = build(2, 2, 2)
    poly = ScalarPoly.from_roots([1, 5, 7], context.order)
    y = context.X(2)
    u = variable(context)
    lhs = AlgPoly.from_scalar(u, context.one()) - AlgPoly.constant(y)
    product = lhs * resolvent(context, poly, y)
    value = context.zero()
    for c in reversed(poly.coeffs):
        value = value * y + c
    rhs = AlgPoly.from_scalar(poly, context.one()) - AlgPoly.constant(value)
    assert product == rhs


def test_phi_one_is_the_cyclotomic_resolvent():
    context = build(2, 1, 2)
    phi = phi_one(context)
    assert phi.degree == 1
    assert phi(0) == context.X(1) - (1 + 5)


def test_baxterized_generators():
    context = build(2, 2, 2)
    a, b = Fraction(3), Fraction(7, 2)
    value = baxterized_value(context, 1, a, b)
    assert value == context.g(1) + context.e(1).scale(context.qdiff * b / (a - b))
    g = baxterized_g(context, 1, variable(context), b)
    assert g(a) == value
    with pytest.raises(PoleError):
        baxterized_value(context, 1, 2, 2)
    with pytest.raises(PoleError):
        baxterized_g(context, 1, 2, 2)


@pytest.mark.parametrize("r, d", [(1, 1), (2, 1), (2, 2)])
def test_baxter_identities(r, d):
    context = build(r, 3, d)
    assert_ok(unitarity_checks(context, points=5))
    checks = yang_baxter_checks(context, points=5)
    assert_ok(checks)
    assert len(checks) == 5


def test_yang_baxter_skipped_below_three_strands():
    checks = yang_baxter_checks(build(2, 2, 2))
    assert [c.status for c in checks] == ["skip"]


def test_quantum_integer():
    q = build(1, 1, 1).q
    assert quantum_integer(q, 1) == 1
    assert quantum_integer(q, 2) == q + q.inverse()
    assert quantum_integer(q, 3) == q * q + 1 + q ** -2


def test_example_prefactor():
    context = build(2, 1, 2)
    assert fusion_prefactor(context, EXAMPLE_SHAPE) == example_prefactor(context)
    other = build(2, 1, 2, v="-3,2/3")
    assert fusion_prefactor(other, EXAMPLE_SHAPE) == example_prefactor(other)
    with pytest.raises(ValueError):
        example_prefactor(build(1, 1, 2))


@pytest.mark.parametrize("r, d, n", [(2, 2, 3), (1, 2, 3), (2, 1, 3), (1, 1, 4)])
def test_regularity_of_the_normalisations(r, d, n):
    context = build(r, 1, d)
    for t in all_standard_tableaux(r, d, n):
        assert_ok(regularity_checks(context, t))


@pytest.mark.parametrize("r, n, d", [(1, 3, 1), (2, 2, 1), (1, 2, 2), (2, 2, 2)])
def test_fusion_equals_interpolation(r, n, d):
    assert_ok(fusion_checks(build(r, n, d)))


def test_step_lemma_and_sum_function():
    context = build(2, 2, 2)
    for t in all_standard_tableaux(2, 2, 2):
        assert lemma_check(context, t).ok
        assert sum_function_check(context, t).ok


def test_fusion_trace_records_every_step():
    context = build(2, 2, 2)
    t = all_standard_tableaux(2, 2, 2)[-1]
    value, trace = fusion_trace(context, t)
    assert value == idempotent_interpolation(context, t)
    assert [step["step"] for step in trace] == [1, 2]
    assert all(len(step["digest"]) == 16 for step in trace)


def test_fusion_refuses_gated_parameters():
    context = build(2, 2, 2, v="1,4")
    with pytest.raises(SemisimplicityError):
        fusion_idempotent(context, all_standard_tableaux(2, 2, 2)[0])


def test_example_needs_its_parameters():
    with pytest.raises(ValueError):
        example_checks(build(2, 2, 2))


@slow
def test_regularity_at_four_boxes():
    context = build(2, 1, 2)
    for t in all_standard_tableaux(2, 2, 4):
        assert_ok(regularity_checks(context, t))


@slow
def test_worked_example():
    context = build(2, 4, 2)
    checks, extra = example_checks(context)
    assert_ok(checks)
    assert extra["tableau"] == str(EXAMPLE_TABLEAU)
    assert len(extra["trace"]) == 4
