"""The fusion formula for E_t, evaluated one box at a time.

Step k multiplies the idempotent E_(k-1) of t|(k-1) by the chain

    phi_k(u) = g_(k-1)(u, c_(k-1)) ... g_1(u, c_1) phi_1(u) g_1^-1 ... g_(k-1)^-1,

the framing factor (v^r - 1)/(v - t_k) at v = zeta_(p_k) and the normalisations
F^T_t(zeta_(p_k)) F_t(u), then sets u = c_k. Poles met on the way must cancel exactly.
"""

from __future__ import annotations

import hashlib
import json

from dataclasses import asdict, dataclass

from yokonuma.combi import RDTableau, content_and_position
from yokonuma.errors import ConsistencyError, PoleError
from yokonuma.fields import ScalarPoly, ratfun_eval
from yokonuma.fusion.algfun import (
    AlgPoly,
    AlgRatFun,
    evaluate_with_cancellation,
    resolvent,
    variable,
)
from yokonuma.fusion.baxter import baxterized_g
from yokonuma.fusion.constants import (
    EXAMPLE_TABLEAU,
    example_prefactor,
    fusion_prefactor,
    regularity_checks,
    tableau_constant,
    tableau_constant_T,
)
from yokonuma.kernel import AlgebraContext, Element
from yokonuma.kernel.relations import identity_check
from yokonuma.semisimple import (
    all_standard_tableaux,
    extensions,
    idempotent_interpolation,
    position_projector,
    require_semisimple,
)
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)


@dataclass
class FusionStep:
    """What happened at one evaluation u = c_k."""

    step: int
    point: str
    den_before: str
    den_after: str
    cancelled: int
    terms: int
    digest: str

    def to_json(self) -> dict:
        return asdict(self)


def digest(x: Element) -> str:
    payload = json.dumps(x.to_json(), sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()[:16]


def cyclotomic_factor(context: AlgebraContext) -> ScalarPoly:
    """f_1(u) = (u - v_1) ... (u - v_d)."""
    return ScalarPoly.from_roots(context.v, context.order)


def phi_one(context: AlgebraContext) -> AlgPoly:
    """(f_1(u) - f_1(X_1)) / (u - X_1); f_1(X_1) vanishes in the cyclotomic quotient."""
    f = cyclotomic_factor(context)
    X = context.X(1)
    value = context.zero()
    for c in reversed(f.coeffs):
        value = value * X + c
    if value:
        raise ConsistencyError(f"f_1(X_1) = {value} is not zero in {context}")
    return resolvent(context, f, X)


def phi_chain(context: AlgebraContext, contents) -> AlgRatFun:
    """phi_k(c_1, .., c_(k-1), u) for k = len(contents) + 1."""
    u = variable(context)
    out = AlgRatFun(phi_one(context))
    for j, c in enumerate(contents, start=1):
        out = baxterized_g(context, j, u, c) * out * context.g_inverse(j)
    return out


def gamma_factor(context: AlgebraContext, k: int) -> AlgPoly:
    """(v^r - 1)/(v - t_k) = sum_s v^(r-1-s) t_k^s as a polynomial in v."""
    r = context.r
    return AlgPoly(context, [context.t(k, r - 1 - j) for j in range(r)])


def gamma_at(context: AlgebraContext, k: int, p: int) -> Element:
    return gamma_factor(context, k)(context.zeta(p))


def _prefix_data(context: AlgebraContext, t: RDTableau):
    return [content_and_position(t, i, context.q, context.v) for i in range(1, t.size + 1)]


def _prefix(t: RDTableau, k: int) -> RDTableau:
    while t.size > k:
        t = t.remove_last()
    return t


def fusion_step(
    context: AlgebraContext, t: RDTableau, previous: Element, trace: list | None = None
) -> Element:
    """E_t from E_u, u = t without its last entry."""
    k = t.size
    data = _prefix_data(context, t)
    c_k, p_k = data[-1]
    framing = gamma_at(context, k, p_k) * previous
    framing = framing.scale(ratfun_eval(tableau_constant_T(context, t), context.zeta(p_k)))
    f = phi_chain(context, [c for c, _ in data[:-1]]) * framing * tableau_constant(context, t)
    multiplicity = f.den.multiplicity(c_k)
    try:
        value = evaluate_with_cancellation(f, c_k, step=k)
    except PoleError:
        log.error(f"Genuine pole at step {k} of {t}: denominator {f.den}")
        raise
    if trace is not None:
        den_after = f.den
        for _ in range(multiplicity):
            den_after = den_after.divide_linear(c_k)[0]
        trace.append(
            FusionStep(k, str(c_k), str(f.den), str(den_after), multiplicity,
                       len(value), digest(value))
        )
    log.debug(f"Fusion step {k}: {multiplicity} factors (u - {c_k}) cancelled, {len(value)} terms")
    return value


def fusion_idempotent(
    context: AlgebraContext, t: RDTableau, trace: list | None = None
) -> Element:
    """E_t by consecutive evaluation, starting from E = 1 for the empty tableau."""
    if t.size > context.n:
        raise ValueError(f"tableau of size {t.size} does not fit in {context}")
    require_semisimple(context, t.size)
    out = context.one()
    for k in range(1, t.size + 1):
        out = fusion_step(context, _prefix(t, k), out, trace)
    return out


def fusion_trace(context: AlgebraContext, t: RDTableau) -> tuple[Element, list[dict]]:
    trace: list[FusionStep] = []
    value = fusion_idempotent(context, t, trace)
    return value, [step.to_json() for step in trace]


def _branching_side(context: AlgebraContext, t: RDTableau) -> tuple[Element, AlgRatFun]:
    """E_(u,p) and (u - c_n)/(u - X_n) E_(u,p).

    The second is written (u - c_n) R(u) E_(u,p) / m(u) with m the polynomial of the
    contents of the extensions of u and R its resolvent at X_n.
    """
    n = t.size
    c_n, p_n = content_and_position(t, n, context.q, context.v)
    u_tab = t.remove_last()
    E_up = position_projector(context, n, p_n) * idempotent_interpolation(context, u_tab)
    contents = {
        content_and_position(s, n, context.q, context.v)[0] for s in extensions(u_tab)
    }
    m = ScalarPoly.from_roots(sorted(contents, key=str), context.order)
    numerator = resolvent(context, m, context.X(n)) * ScalarPoly.linear(c_n, context.order)
    return E_up, AlgRatFun(numerator * E_up, m)


def lemma_check(context: AlgebraContext, t: RDTableau) -> Check:
    """F_t(u) phi_n(u) E_(u,p) = (u - c_n)/(u - X_n) E_(u,p) as functions of u."""
    data = _prefix_data(context, t)
    E_up, rhs = _branching_side(context, t)
    lhs = phi_chain(context, [c for c, _ in data[:-1]]) * E_up * tableau_constant(context, t)
    return Check.of("fusion_lemma", lhs == rhs, {"t": str(t)},
                    {"lhs_den": str(lhs.den), "rhs_den": str(rhs.den)})


def sum_function_check(context: AlgebraContext, t: RDTableau) -> Check:
    """(u - c_n)/(u - X_n) E_(u,p) at u = c_n is E_t."""
    c_n = content_and_position(t, t.size, context.q, context.v)[0]
    value = evaluate_with_cancellation(_branching_side(context, t)[1], c_n)
    return identity_check("sum_function", value, idempotent_interpolation(context, t), t=str(t))


def fusion_checks(context: AlgebraContext, tableaux=None) -> list[Check]:
    """Fusion against interpolation, the step lemma and the regularity of the
    normalisations, for every standard tableau of size n unless given."""
    require_semisimple(context)
    tableaux = tableaux or all_standard_tableaux(context.r, context.d, context.n)
    checks = []
    for t in tableaux:
        checks.extend(regularity_checks(context, t))
        checks.append(lemma_check(context, t))
        checks.append(sum_function_check(context, t))
        try:
            value = fusion_idempotent(context, t)
        except PoleError as exc:
            checks.append(Check.of("fusion_equals_interpolation", False, {"t": str(t)},
                                   {"pole": str(exc), "step": exc.step}))
            continue
        checks.append(
            identity_check("fusion_equals_interpolation", value,
                           idempotent_interpolation(context, t), t=str(t))
        )
    log.info(f"Fusion checked on {len(tableaux)} tableaux")
    return checks


def example_checks(context: AlgebraContext) -> tuple[list[Check], dict]:
    """The worked example at r = d = 2, n = 4: its prefactor and its idempotent."""
    if (context.r, context.d, context.n) != (2, 2, 4):
        raise ValueError(f"the worked example needs r = d = 2 and n = 4, got {context}")
    t = EXAMPLE_TABLEAU
    computed = fusion_prefactor(context, t.shape)
    expected = example_prefactor(context)
    checks = [
        Check.of("example_prefactor", computed == expected, {"shape": str(t.shape)},
                 {"computed": str(computed), "expected": str(expected)})
    ]
    value, trace = fusion_trace(context, t)
    checks.append(
        identity_check("example_idempotent", value, idempotent_interpolation(context, t),
                       t=str(t))
    )
    checks.append(identity_check("example_idempotent_square", value * value, value, t=str(t)))
    extra = {
        "tableau": str(t),
        "prefactor": str(computed),
        "expected_prefactor": str(expected),
        "trace": trace,
        "terms": len(value),
    }
    return checks, extra
