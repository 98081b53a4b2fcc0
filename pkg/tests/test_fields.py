from fractions import Fraction

import pytest

from sympy.polys.domains import QQ
from sympy.polys.domains.algebraicfield import AlgebraicField

from yokonuma.errors import NoSolutionError, PoleError
from yokonuma.fields import (
    Cyclotomic,
    EchelonBasis,
    ExactMatrix,
    ScalarPoly,
    ScalarRatFun,
    cyclotomic_polynomial,
    field_domain,
    poly_gcd,
    ratfun_eval,
    to_rational,
)


@pytest.mark.parametrize("order", [1, 2, 3, 4, 6])
def test_roots_of_unity(order):
    zeta = Cyclotomic.root_of_unity(order)
    assert zeta ** order == 1
    for k in range(1, order):
        assert zeta ** k != 1
    total = sum((Cyclotomic.zeta(order, k) for k in range(1, order + 1)), Cyclotomic.zero(order))
    assert total == (1 if order == 1 else 0)


@pytest.mark.parametrize("order", [2, 3, 4])
def test_field_operations(order):
    zeta = Cyclotomic.root_of_unity(order)
    x = 3 + zeta * Fraction(1, 2)
    y = zeta - 5
    assert (x * y) / y == x
    assert x * x.inverse() == 1
    assert x ** -2 * x ** 2 == 1
    assert (x + y) - y == x
    assert 1 / x == x.inverse()


def test_rational_parsing():
    assert to_rational("3") == 3
    assert to_rational("-3/2") == Fraction(-3, 2)
    with pytest.raises(TypeError):
        to_rational(1.5)
    with pytest.raises(ValueError):
        to_rational("1.5")
    with pytest.raises(ZeroDivisionError):
        to_rational("1/0")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zero(3).inverse()


def test_zeta_index_range():
    with pytest.raises(IndexError):
        Cyclotomic.zeta(2, 3)


def test_rational_hash_consistency():
    two = Cyclotomic.from_rational(2, 4)
    assert two == 2
    assert hash(two) == hash(to_rational(2))


def test_json_round_trip_of_scalar():
    x = Cyclotomic.root_of_unity(3) * Fraction(-7, 3) + 1
    assert Cyclotomic.from_json(x.to_json()) == x


def test_cyclotomic_polynomial():
    assert cyclotomic_polynomial(4) == ScalarPoly([1, 0, 1])
    assert cyclotomic_polynomial(3) == ScalarPoly([1, 1, 1])


def test_poly_division_and_multiplicity():
    u = ScalarPoly.variable(1)
    p = ScalarPoly.from_roots([2, 2, 3], 1)
    assert p.degree == 3
    assert p.multiplicity(2) == 2
    assert p.multiplicity(3) == 1
    assert p.multiplicity(5) == 0
    quot, rem = divmod(p, ScalarPoly.linear(3, 1))
    assert not rem
    assert quot == (u - 2) ** 2
    quot, remainder = p.divide_linear(1)
    assert remainder == p(1)
    assert quot * ScalarPoly.linear(1, 1) + remainder == p


def test_poly_gcd_is_monic():
    a = ScalarPoly.from_roots([1, 2], 1) * 3
    b = ScalarPoly.from_roots([2, 5], 1) * 7
    assert poly_gcd(a, b) == ScalarPoly.linear(2, 1)


def test_ratfun_normalises_and_cancels():
    order = 1
    num = ScalarPoly.from_roots([1, 2], order) * 2
    den = ScalarPoly.from_roots([2, 4], order) * 4
    f = ScalarRatFun(num, den)
    assert f.den == ScalarPoly.linear(4, order)
    assert f.num == ScalarPoly.linear(1, order) * Fraction(1, 2)
    assert ratfun_eval(f, 2) == Fraction(1, 2) * (2 - 1) / (2 - 4)
    with pytest.raises(PoleError):
        ratfun_eval(f, 4)


def test_ratfun_field_axioms():
    u = ScalarPoly.variable(1)
    f = ScalarRatFun(u + 1, u - 1)
    g = ScalarRatFun(u, u + 2)
    assert (f * g) / g == f
    assert (f + g) - g == f


def test_exact_matrix_rational():
    m = ExactMatrix([[2, 1], [1, 1]], 1)
    assert m.determinant() == 1
    assert m.rank() == 2
    assert (m @ m.inverse()).rows == ExactMatrix.identity(2, 1).rows
    assert m.solve([3, 2]) == [1, 1]
    singular = ExactMatrix([[1, 2], [2, 4]], 1)
    assert singular.rank() == 1
    with pytest.raises(NoSolutionError):
        singular.solve([1, 0])
    with pytest.raises(NoSolutionError):
        singular.inverse()


def test_exact_matrix_cyclotomic():
    order = 3
    z = Cyclotomic.root_of_unity(order)
    m = ExactMatrix([[1, z], [z, 1]], order)
    assert m.determinant() == 1 - z * z
    inverse = m.inverse()
    assert (m @ inverse).rows == ExactMatrix.identity(2, order).rows
    assert m.solve([1 + z, 1 + z]) == [1, 1]


def test_echelon_basis():
    echelon = EchelonBasis()
    assert echelon.add({0: Cyclotomic.one(1), 2: Cyclotomic.from_rational(3, 1)})
    assert echelon.add({2: Cyclotomic.one(1)})
    assert not echelon.add({0: Cyclotomic.from_rational(2, 1)})
    assert echelon.contains({0: Cyclotomic.one(1), 2: Cyclotomic.one(1)})
    assert not echelon.contains({1: Cyclotomic.one(1)})
    assert echelon.rank == 2


@pytest.mark.parametrize("order", [3, 5, 8, 12])
def test_field_domain_is_a_sympy_number_field(order):
    domain = field_domain(order)
    assert isinstance(domain, AlgebraicField)
    modulus = cyclotomic_polynomial(order).to_dup()
    assert domain.mod.to_list() == modulus
    zeta = Cyclotomic.root_of_unity(order)
    assert zeta.to_domain() == domain.unit
    assert zeta.coeffs == (0, 1) + (0,) * (zeta.degree - 2)


def test_small_orders_stay_rational():
    assert field_domain(1) is QQ
    assert field_domain(2) is QQ
    assert Cyclotomic.root_of_unity(2).to_domain() == QQ(-1)


def test_long_coefficient_vectors_are_reduced():
    z = Cyclotomic.root_of_unity(3)
    assert Cyclotomic(3, [0, 0, 1]) == -1 - z
    assert Cyclotomic(4, [1, 0, 1, 0, 1]) == 1
    assert Cyclotomic(2, [5, 1]) == 4


def test_poly_gcd_over_cyclotomic_coefficients():
    order = 3
    z = Cyclotomic.root_of_unity(order)
    common = ScalarPoly.linear(z, order)
    a = common * ScalarPoly.linear(1, order) * 5
    b = common * ScalarPoly.linear(-z, order)
    assert poly_gcd(a, b) == common
    quot, rem = divmod(a, common)
    assert not rem
    assert quot == ScalarPoly.linear(1, order) * 5
    assert a(z) == 0


def test_exact_matrix_cyclotomic_uses_number_field():
    order = 3
    z = Cyclotomic.root_of_unity(order)
    m = ExactMatrix([[1, z], [z, z * z]], order)
    assert m.to_domain_matrix().domain == field_domain(order)
    assert m.rank() == 1
    assert m.determinant() == 0
    with pytest.raises(NoSolutionError):
        m.inverse()
    with pytest.raises(NoSolutionError):
        m.solve([1, 0])
    reduced, pivots = m.row_reduce()
    assert pivots == (0,)
    assert reduced.rows[0] == [Cyclotomic.one(order), z]
