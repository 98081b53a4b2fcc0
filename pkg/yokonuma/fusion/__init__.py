from yokonuma.fusion.algfun import (
    AlgPoly,
    AlgRatFun,
    evaluate_with_cancellation,
    resolvent,
    variable,
)
from yokonuma.fusion.baxter import (
    baxterized_g,
    baxterized_value,
    unitarity_checks,
    yang_baxter_checks,
)
from yokonuma.fusion.constants import (
    EXAMPLE_SHAPE,
    EXAMPLE_TABLEAU,
    FusionConstants,
    example_prefactor,
    fusion_constants,
    fusion_prefactor,
    quantum_integer,
    regularity_checks,
    shape_constant,
    shape_constant_T,
    tableau_constant,
    tableau_constant_T,
)
from yokonuma.fusion.procedure import (
    FusionStep,
    example_checks,
    fusion_checks,
    fusion_idempotent,
    fusion_step,
    fusion_trace,
    gamma_at,
    gamma_factor,
    lemma_check,
    phi_chain,
    phi_one,
    sum_function_check,
)
