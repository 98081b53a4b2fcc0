from yokonuma.fields.cyclotomic import (
    Cyclotomic,
    Rational,
    field_domain,
    field_modulus,
    is_rational_value,
    to_rational,
)
from yokonuma.fields.linalg import EchelonBasis, ExactMatrix
from yokonuma.fields.poly import ScalarPoly, cyclotomic_polynomial, poly_gcd
from yokonuma.fields.ratfun import ScalarRatFun, ratfun_eval, ratfun_normalize
