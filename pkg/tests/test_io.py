import random

from fractions import Fraction

import pytest

from yokonuma.errors import SchemaError
from yokonuma.kernel import AlgebraContext
from yokonuma.kernel.io import element_from_json, load_element, save_element
from yokonuma.kernel.relations import random_word


def build(r=2, n=2, d=2):
    return AlgebraContext.from_params(r=r, n=n, d=d, q="2", v="1" if d == 1 else "1,5")


def test_save_and_load(tmp_path):
    context = build()
    x = context.X(2) * context.g(1) + context.t(1, 1).scale(Fraction(-3, 4))
    save_element(x, tmp_path / "sub" / "x.json")
    assert load_element(tmp_path / "sub" / "x.json", context) == x


def test_random_element_with_cyclotomic_coefficients(tmp_path):
    context = build(r=3, n=3, d=1)
    rng = random.Random(0)
    x = context.zero()
    for k in range(50):
        x = x + random_word(context, rng).scale(context.zeta(k % 3 + 1) * (k - 25))
    save_element(x, tmp_path / "x.json")
    assert load_element(tmp_path / "x.json", context) == x


def term(alpha=(0, 0), beta=(0, 0), w=(1, 2), coeff="1"):
    return {"alpha": list(alpha), "beta": list(beta), "w": list(w), "coeff": coeff}


def payload(*terms, r=2, n=2, d=2):
    return {"r": r, "n": n, "d": d, "terms": list(terms)}


def test_rational_string_coefficient():
    context = build()
    x = element_from_json(payload(term(w=(2, 1), coeff="-2/3")), context)
    assert x == context.g(1).scale(Fraction(-2, 3))


def test_zero_coefficients_are_dropped():
    context = build()
    assert element_from_json(payload(term(coeff="0")), context) == context.zero()


@pytest.mark.parametrize(
    "data, location",
    [
        (payload(term(alpha=(0, 2))), "terms[0].alpha[1]"),
        (payload(term(beta=(-1, 0))), "terms[0].beta[0]"),
        (payload(term(alpha=(0,))), "terms[0].alpha"),
        (payload(term(w=(1, 1))), "terms[0].w"),
        (payload(term(), term(coeff="2")), "terms[1]"),
        (payload(term(coeff="1/0")), "terms[0].coeff"),
        (payload(term(coeff=1.5)), "terms[0].coeff"),
        (payload(term(), r=3), "$.r"),
        ({"r": 2, "n": 2, "d": 2}, "$.terms"),
        ([], "$"),
    ],
)
def test_schema_errors(data, location):
    with pytest.raises(SchemaError) as info:
        element_from_json(data, build())
    assert info.value.location == location


def test_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"r": 2,')
    with pytest.raises(SchemaError):
        load_element(path, build())


def test_wrong_order_is_reported():
    context = build()
    data = payload(term(coeff={"order": 5, "coeffs": ["1"]}))
    with pytest.raises(SchemaError) as info:
        element_from_json(data, context)
    assert info.value.location == "terms[0].coeff.order"
