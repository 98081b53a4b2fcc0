"""Normalising constants of the fusion formula.

For an (r,d)-partition lambda and a standard tableau t of shape lambda with
mu = shape(t without n):

    F^T_lambda = prod_theta prod_(xi != zeta_p(theta)) (zeta_p(theta) - xi)
    F_lambda   = prod_theta [h(theta)]_q q^(-cc(theta))
                 * prod_(k != l(theta)) (v_l q^h' - v_k q^-h') q^cc(theta)
    F^T_t(v)   = 1 / prod_(xi != zeta_(p_n)) (v - xi)
    F_t(u)     = (u - c_n) / prod_i (u - v_i)
                 * prod_(i < n) (u - c_i)^2 / ((u - c_i)^2 - (q - q^-1)^2 u c_i [p_i = p_n])

with h the hook length, h' the hook against lambda^(p(theta))_k and cc = col - row.
"""

from __future__ import annotations

from dataclasses import dataclass

from yokonuma.combi import (
    RDNode,
    RDPartition,
    RDTableau,
    content_and_position,
    generalized_hook,
    hook_length,
)
from yokonuma.fields import Cyclotomic, ScalarPoly, ScalarRatFun, ratfun_eval
from yokonuma.kernel import AlgebraContext
from yokonuma.tasks.report import Check

EXAMPLE_SHAPE = RDPartition([[(2,), ()], [(1,), (1,)]])
EXAMPLE_TABLEAU = RDTableau(
    EXAMPLE_SHAPE,
    [RDNode(1, 1, 1, 1), RDNode(1, 1, 2, 1), RDNode(1, 2, 1, 1), RDNode(1, 1, 2, 2)],
)


@dataclass(frozen=True)
class FusionConstants:
    shape_T: Cyclotomic
    shape: Cyclotomic
    tableau_T: ScalarRatFun
    tableau: ScalarRatFun


def quantum_integer(q: Cyclotomic, a: int) -> Cyclotomic:
    """[a]_q = q^(a-1) + q^(a-3) + ... + q^(-a+1)."""
    out = Cyclotomic.zero(q.order)
    for j in range(a):
        out = out + q ** (a - 1 - 2 * j)
    return out


def shape_constant_T(context: AlgebraContext, shape: RDPartition) -> Cyclotomic:
    out = context.one_scalar
    for node in shape.nodes():
        z = context.zeta(node.k)
        for p in range(1, context.r + 1):
            if p != node.k:
                out = out * (z - context.zeta(p))
    return out


def shape_constant(context: AlgebraContext, shape: RDPartition) -> Cyclotomic:
    q, v = context.q, context.v
    out = context.one_scalar
    for node in shape.nodes():
        cc = node.classical_content
        out = out * quantum_integer(q, hook_length(shape, node)) * q ** (-cc)
        for k in range(1, shape.d + 1):
            if k == node.l:
                continue
            h = generalized_hook(shape, node, shape.component(node.k, k))
            out = out * (v[node.l - 1] * q ** h - v[k - 1] * q ** (-h)) * q ** cc
    return out


def tableau_constant_T(context: AlgebraContext, t: RDTableau) -> ScalarRatFun:
    p_n = t.node(t.size).k
    den = ScalarPoly.from_roots(
        [context.zeta(p) for p in range(1, context.r + 1) if p != p_n], context.order
    )
    return ScalarRatFun(ScalarPoly.constant(1, context.order), den)


def tableau_constant(context: AlgebraContext, t: RDTableau) -> ScalarRatFun:
    order, n = context.order, t.size
    u = ScalarPoly.variable(order)
    data = [content_and_position(t, i, context.q, context.v) for i in range(1, n + 1)]
    c_n, p_n = data[-1]
    out = ScalarRatFun(ScalarPoly.linear(c_n, order), ScalarPoly.from_roots(context.v, order))
    for c, p in data[:-1]:
        square = ScalarPoly.linear(c, order) ** 2
        den = square - u * (context.qdiff ** 2 * c) if p == p_n else square
        out = out * ScalarRatFun(square, den)
    return out


def fusion_constants(context: AlgebraContext, t: RDTableau) -> FusionConstants:
    return FusionConstants(
        shape_constant_T(context, t.shape),
        shape_constant(context, t.shape),
        tableau_constant_T(context, t),
        tableau_constant(context, t),
    )


def fusion_prefactor(context: AlgebraContext, shape: RDPartition) -> Cyclotomic:
    """1 / (F^T_lambda F_lambda)."""
    return (shape_constant_T(context, shape) * shape_constant(context, shape)).inverse()


def example_prefactor(context: AlgebraContext) -> Cyclotomic:
    """zeta_1^2 zeta_2^2 / (16 (q + q^-1)(v_1 - v_2)(v_2 q - v_1 q^-1)(v_1 q - v_2 q^-1)^2)."""
    if (context.r, context.d) != (2, 2):
        raise ValueError(f"the worked example lives at r = d = 2, not {context}")
    q, (v1, v2) = context.q, context.v
    z1, z2 = context.zeta(1), context.zeta(2)
    qi = q.inverse()
    den = 16 * (q + qi) * (v1 - v2) * (v2 * q - v1 * qi) * (v1 * q - v2 * qi) ** 2
    return z1 ** 2 * z2 ** 2 / den


def regularity_checks(context: AlgebraContext, t: RDTableau) -> list[Check]:
    """F^T_t(zeta_(p_n)) = zeta_(p_n)/r = F^T_mu / F^T_lambda and
    F_t(c_n) = F_mu / F_lambda."""
    n = t.size
    c_n, p_n = content_and_position(t, n, context.q, context.v)
    z = context.zeta(p_n)
    mu = t.remove_last().shape
    lam = t.shape
    label = {"t": str(t)}
    checks = []

    value_T = ratfun_eval(tableau_constant_T(context, t), z)
    ratio_T = shape_constant_T(context, mu) / shape_constant_T(context, lam)
    checks.append(
        Check.of("framing_constant_ratio", value_T == ratio_T == z / context.r, label,
                 {"value": str(value_T), "ratio": str(ratio_T)})
    )
    try:
        value = ratfun_eval(tableau_constant(context, t), c_n)
    except ZeroDivisionError as exc:
        checks.append(Check.of("content_constant_ratio", False, label, str(exc)))
        return checks
    ratio = shape_constant(context, mu) / shape_constant(context, lam)
    checks.append(
        Check.of("content_constant_ratio", value == ratio, label,
                 {"value": str(value), "ratio": str(ratio)})
    )
    return checks
