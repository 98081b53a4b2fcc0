"""Exact checks of the defining relations and of the word basis of one context."""

from __future__ import annotations

import random

from itertools import combinations

from sympy.utilities.iterables import multiset_partitions

from yokonuma.combi.partition import SetPartition
from yokonuma.combi.permutation import Permutation, symmetric_group
from yokonuma.kernel.context import AlgebraContext
from yokonuma.kernel.element import Element
from yokonuma.kernel.special import set_idempotent
from yokonuma.kernel.words import Word, is_normal
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)

MAX_WITNESS_TERMS = 8


def element_witness(x: Element) -> dict:
    """A short JSON-safe description of a nonzero difference."""
    items = x.items()
    return {
        "terms": len(items),
        "leading": [
            {"alpha": list(w.alpha), "beta": list(w.beta), "w": list(w.perm), "coeff": str(c)}
            for w, c in items[:MAX_WITNESS_TERMS]
        ],
    }


def identity_check(name: str, lhs: Element, rhs: Element, **instance) -> Check:
    diff = lhs - rhs
    return Check.of(name, diff.is_zero(), instance or None, element_witness(diff))


def verify_defining_relations(
    context: AlgebraContext, pair_limit: int | None = None
) -> list[Check]:
    """Every defining relation and the derived identities, as normal-form equalities."""
    n, r = context.n, context.r
    g, t, e, X = context.g, context.t, context.e, context.X
    one = context.one()
    checks: list[Check] = []

    for j in range(1, n + 1):
        checks.append(identity_check("t_power", t(j) ** r, one, j=j))
        checks.append(identity_check("X_inverse", X(j) * context.X_inverse(j), one, k=j))
        for k in range(j + 1, n + 1):
            checks.append(identity_check("t_commute", t(j) * t(k), t(k) * t(j), j=j, k=k))
            checks.append(identity_check("X_commute", X(j) * X(k), X(k) * X(j), j=j, k=k))
            ejk = e(j, k)
            checks.append(identity_check("e_idempotent", ejk * ejk, ejk, i=j, j=k))
            for m in range(1, n + 1):
                checks.append(identity_check("e_t_commute", ejk * t(m), t(m) * ejk, i=j, j=k, m=m))
        for k in range(1, n + 1):
            checks.append(identity_check("X_t_commute", X(j) * t(k), t(k) * X(j), j=j, k=k))

    for i in range(1, n):
        s = Permutation.simple(i, n)
        gi, ei = g(i), e(i)
        checks.append(identity_check("quadratic", gi * gi, one + context.qdiff * (ei * gi), i=i))
        checks.append(identity_check("inverse", gi * context.g_inverse(i), one, i=i))
        checks.append(identity_check("e_g_commute", ei * gi, gi * ei, i=i))
        for j in range(1, n + 1):
            checks.append(identity_check("g_t_push", gi * t(j), t(s(j)) * gi, i=i, j=j))
        for k, l in combinations(range(1, n + 1), 2):
            checks.append(
                identity_check("e_pairs", ei * e(k, l), e(s(k), s(l)) * ei, i=i, k=k, l=l)
            )
            checks.append(
                identity_check("e_g_push", e(k, l) * gi, gi * e(s(k), s(l)), i=i, k=k, l=l)
            )
        if i + 1 < n:
            gj = g(i + 1)
            checks.append(identity_check("braid", gi * gj * gi, gj * gi * gj, i=i))
        for j in range(i + 2, n):
            checks.append(identity_check("far_commute", gi * g(j), g(j) * gi, i=i, j=j))
        if i >= 2:
            checks.append(identity_check("X1_g_commute", X(1) * gi, gi * X(1), i=i))

    if n >= 2:
        g1, X1 = g(1), X(1)
        checks.append(identity_check("affine_braid", g1 * X1 * g1 * X1, X1 * g1 * X1 * g1))
        for k in range(1, n):
            checks.append(identity_check("jm_recursion", g(k) * X(k) * g(k), X(k + 1), k=k))

    if n:
        checks.append(identity_check("cyclotomic", _f1(context), context.zero()))
    checks.extend(verify_set_idempotents(context, pair_limit))
    failed = sum(not c.ok for c in checks)
    log.info(f"Defining relations for {context}: {len(checks) - failed}/{len(checks)} hold")
    return checks


def _f1(context: AlgebraContext) -> Element:
    out = context.one()
    for v in context.v:
        out = out * (context.X(1) - v)
    return out


def verify_set_idempotents(context: AlgebraContext, limit: int | None = None) -> list[Check]:
    """g_w E_A = E_(A w^-1) g_w over set partitions A and permutations w.

    Every pair (A, w) is checked unless ``limit`` caps them; the pairs left out are then
    reported by a single skipped check.
    """
    n = context.n
    if n < 2:
        return []
    partitions = _set_partitions(n)
    group = symmetric_group(n)
    total = len(partitions) * len(group)
    checks = []
    count = 0
    for A in partitions:
        EA = set_idempotent(context, A)
        blocks = [list(b) for b in A.blocks]
        checks.append(identity_check("E_idempotent", EA * EA, EA, A=blocks))
        for w in group:
            if limit is not None and count >= limit:
                break
            count += 1
            lhs = context.g_w(w) * EA
            rhs = set_idempotent(context, A.act(w.inverse())) * context.g_w(w)
            checks.append(identity_check("g_w_E_A", lhs, rhs, A=blocks, w=list(w)))
    if count < total:
        log.warning(f"g_w E_A: {total - count} of {total} pairs left unchecked")
        checks.append(
            Check.skipped(
                "g_w_E_A",
                f"{total - count} of {total} pairs not checked (limit {limit})",
                {"checked": count, "pairs": total},
            )
        )
    return checks


def _set_partitions(n: int) -> list[SetPartition]:
    points = list(range(1, n + 1))
    return [SetPartition(blocks, n) for blocks in multiset_partitions(points)]


def random_word(context: AlgebraContext, rng: random.Random) -> Element:
    n = context.n
    alpha = tuple(rng.randrange(context.d) for _ in range(n))
    beta = tuple(rng.randrange(context.r) for _ in range(n))
    w = rng.choice(symmetric_group(n))
    return context.element({Word(alpha, beta, w): context.one_scalar})


def audit_basis(context: AlgebraContext, samples: int = 100, seed: int = 1234) -> list[Check]:
    """Counts the normal words and samples closure, associativity and the star map."""
    rng = random.Random(seed)
    words = list(context.basis_words())
    indices = {context.index(w) for w in words}
    checks = [
        Check.of(
            "word_count",
            len(words) == context.dimension and indices == set(range(context.dimension)),
            {"dimension": context.dimension},
            {"counted": len(words), "distinct_indices": len(indices)},
        )
    ]
    for record in context.bootstrap_report():
        checks.append(
            Check.of(
                "bootstrap",
                record.f_leading_ok and record.h_constant_ok,
                {"i": record.index, "rule_terms": record.rule_terms},
                record._asdict(),
            )
        )
    for k in range(1, context.n + 1):
        checks.append(
            identity_check("X_inverse", context.X(k) * context.X_inverse(k), context.one(), k=k)
        )
    if context.n == 0:
        return checks

    closure_ok, associative_ok, anti_ok, involutive_ok = True, True, True, True
    witness = None
    for sample in range(samples):
        x, y, z = (random_word(context, rng) for _ in range(3))
        xy = x * y
        if closure_ok and not all(is_normal(w, context.d) for w in xy.terms):
            closure_ok, witness = False, {"sample": sample, "x": str(x), "y": str(y)}
        if associative_ok and xy * z != x * (y * z):
            associative_ok = False
            witness = {"sample": sample, "x": str(x), "y": str(y), "z": str(z)}
        if anti_ok and xy.star() != y.star() * x.star():
            anti_ok, witness = False, {"sample": sample, "x": str(x), "y": str(y)}
        if involutive_ok and x.star().star() != x:
            involutive_ok, witness = False, {"sample": sample, "x": str(x)}
    instance = {"samples": samples, "seed": seed}
    checks.append(Check.of("closure", closure_ok, instance, witness))
    checks.append(Check.of("associativity", associative_ok, instance, witness))
    checks.append(Check.of("star_antihomomorphism", anti_ok, instance, witness))
    checks.append(Check.of("star_involution", involutive_ok, instance, witness))
    log.debug(f"Basis audit cache: {context.cache_stats()}")
    return checks
