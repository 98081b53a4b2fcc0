"""The verification commands of the batch entry point.

Every command takes the algebra context and the composed config and returns the checks
it ran together with a JSON-safe payload for the report.
"""

from __future__ import annotations

import itertools
import math
import random

from typing import Callable

from omegaconf import DictConfig

from yokonuma.cellular import (
    annihilation_checks,
    cellular_basis,
    framing_subalgebra_checks,
    lemma_checks,
    row_standard_expansion,
    verify_cellularity,
    verify_jm,
)
from yokonuma.combi import (
    dominates,
    dominates_tableau,
    enumerate_rd_partitions,
    initial_tableau,
    standard_tableaux,
)
from yokonuma.errors import SchemaError, SizeLimitError
from yokonuma.fusion import example_checks, fusion_checks, unitarity_checks, yang_baxter_checks
from yokonuma.kernel import (
    AlgebraContext,
    audit_basis,
    dimension,
    frobenius_check,
    load_element,
    save_element,
    theta_checks,
    theta_nondegeneracy,
    tower_decomposition_check,
    verify_defining_relations,
)
from yokonuma.semisimple import (
    all_standard_tableaux,
    require_semisimple,
    sum_formula_checks,
    verify_seminormal,
)
from yokonuma.tasks.report import Check
from yokonuma.utils.pylogger import get_pylogger

log = get_pylogger(__name__)

CommandResult = tuple[list[Check], dict]


def size_guard(context: AlgebraContext, cfg: DictConfig, n: int | None = None) -> None:
    """Refuses dense linear algebra on Y_(r,n)^d above ``checks.max_dimension``."""
    n = context.n if n is None else n
    size = dimension(context.r, n, context.d)
    limit = cfg.checks.get("max_dimension")
    if limit is not None and size > limit:
        raise SizeLimitError(
            f"dimension {size} of Y_(r={context.r}, n={n})^(d={context.d}) exceeds {limit}"
        )


def _seed(cfg: DictConfig) -> int:
    seed = cfg.get("seed")
    return 1234 if seed is None else int(seed)


def relations_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    return verify_defining_relations(context, cfg.checks.get("idempotent_pairs")), {}


def basis_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    checks = audit_basis(context, samples=cfg.checks.samples, seed=_seed(cfg))
    return checks, {"dimension": context.dimension, "cache": context.cache_stats()}


def tower_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    size_guard(context, cfg, context.n + 1)
    samples = cfg.checks.get("tower_samples", 10)
    checks = tower_decomposition_check(context, samples=samples, seed=_seed(cfg))
    checks.extend(theta_checks(context, samples=samples, seed=_seed(cfg)))
    checks.append(theta_nondegeneracy(context))
    return checks, {}


def frobenius_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    return frobenius_check(context, max_dimension=cfg.checks.gram_limit), {}


def tableaux_checks(r: int, d: int, n: int, limit: int = 40, seed: int = 1234) -> CommandResult:
    """Standard tableaux counts and the order properties of dominance.

    Transitivity runs over all triples of shapes when there are at most ``limit`` shapes
    and over ``limit ** 2`` random triples otherwise.
    """
    shapes = list(enumerate_rd_partitions(r, d, n))
    counts = {str(lam): len(standard_tableaux(lam)) for lam in shapes}
    total = sum(c * c for c in counts.values())
    expected = (r * d) ** n * math.factorial(n)
    instance = {"r": r, "d": d, "n": n}
    checks = [
        Check.of("standard_tableaux_count", total == expected, instance,
                 {"sum_of_squares": total, "expected": expected})
    ]

    reflexive = all(dominates(lam, lam) for lam in shapes)
    checks.append(Check.of("dominance_reflexive", reflexive, instance))
    witness = None
    for lam, mu in itertools.combinations(shapes, 2):
        if dominates(lam, mu) and dominates(mu, lam):
            witness = {"lambda": str(lam), "mu": str(mu)}
            break
    checks.append(Check.of("dominance_antisymmetric", witness is None, instance, witness))

    if len(shapes) <= limit:
        triples = itertools.product(shapes, repeat=3)
    else:
        log.warning(f"{len(shapes)} shapes: sampling {limit ** 2} triples for transitivity")
        rng = random.Random(seed)
        triples = ([rng.choice(shapes) for _ in range(3)] for _ in range(limit ** 2))
    witness = None
    for a, b, c in triples:
        if dominates(a, b) and dominates(b, c) and not dominates(a, c):
            witness = {"a": str(a), "b": str(b), "c": str(c)}
            break
    checks.append(Check.of("dominance_transitive", witness is None, instance, witness))

    for lam in shapes:
        tableaux = standard_tableaux(lam)
        initial = initial_tableau(lam)
        bad = [str(t) for t in tableaux if not t.is_standard() or not dominates_tableau(initial, t)]
        checks.append(
            Check.of("initial_tableau_maximal", not bad, {"shape": str(lam)}, {"tableaux": bad[:3]})
        )
    return checks, {"shapes": len(shapes), "standard_tableaux": counts}


def tableaux_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    return tableaux_checks(context.r, context.d, context.n, seed=_seed(cfg))


def cellular_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    size_guard(context, cfg)
    basis = cellular_basis(context, cfg.checks.max_dimension)
    checks = verify_cellularity(basis)
    checks.extend(lemma_checks(basis))
    checks.extend(annihilation_checks(basis))
    framing, coefficients = framing_subalgebra_checks(context)
    checks.extend(framing)
    checks.extend(row_standard_expansion(basis, cfg.checks.get("row_standard_limit")))
    return checks, {"basis_size": len(basis), "framing": coefficients}


def jm_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    size_guard(context, cfg)
    return verify_jm(cellular_basis(context, cfg.checks.max_dimension)), {}


def idempotents_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    require_semisimple(context)
    size_guard(context, cfg)
    basis = cellular_basis(context, cfg.checks.max_dimension)
    checks = verify_seminormal(
        context,
        basis,
        probe_pairs=cfg.checks.get("probe_pairs"),
        centralizer_limit=cfg.checks.get("centralizer_limit", 0),
        primitive_samples=cfg.checks.get("primitive_samples", 4),
        seed=_seed(cfg),
    )
    if context.n > 0:
        for u in all_standard_tableaux(context.r, context.d, context.n - 1):
            checks.extend(sum_formula_checks(context, u))
    return checks, {}


def fusion_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    require_semisimple(context)
    size_guard(context, cfg)
    points = cfg.checks.get("baxter_points", 5)
    checks = unitarity_checks(context, points=points, seed=_seed(cfg))
    checks.extend(yang_baxter_checks(context, points=points, seed=_seed(cfg)))
    checks.extend(fusion_checks(context))
    return checks, {}


def example_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    if (context.r, context.d, context.n) != (2, 2, 4):
        raise SchemaError(
            f"example-paper needs r = d = 2 and n = 4, got {context.params()}", "algebra"
        )
    require_semisimple(context)
    return example_checks(context)


def mul_command(context: AlgebraContext, cfg: DictConfig) -> CommandResult:
    """Product of the elements stored at ``mul.left`` and ``mul.right``."""
    mul = cfg.get("mul") or {}
    for key in ("left", "right"):
        if not mul.get(key):
            raise SchemaError(f"mul.{key} is required by the mul command", f"mul.{key}")
    product = load_element(mul.left, context) * load_element(mul.right, context)
    log.info(f"Product has {len(product)} terms")
    if mul.get("output"):
        save_element(product, mul.output)
        return [], {"output": str(mul.output), "terms": len(product)}
    return [], {"product": product.to_json()}


COMMAND_REGISTRY: dict[str, Callable[[AlgebraContext, DictConfig], CommandResult]] = {
    "relations": relations_command,
    "basis": basis_command,
    "tower": tower_command,
    "frobenius": frobenius_command,
    "tableaux": tableaux_command,
    "cellular": cellular_command,
    "jm": jm_command,
    "idempotents": idempotents_command,
    "fusion": fusion_command,
    "example-paper": example_command,
    "mul": mul_command,
}


def get_command(name: str) -> Callable[[AlgebraContext, DictConfig], CommandResult]:
    if name not in COMMAND_REGISTRY:
        raise SchemaError(
            f"Unknown command {name}. Available commands: {list(COMMAND_REGISTRY)}", "command"
        )
    return COMMAND_REGISTRY[name]
