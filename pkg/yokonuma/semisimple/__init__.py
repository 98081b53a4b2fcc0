from yokonuma.semisimple.criterion import (
    criterion_check,
    criterion_factors,
    require_semisimple,
    semisimplicity_criterion,
    vanishing_factors,
)
from yokonuma.semisimple.idempotents import (
    ContentTables,
    all_standard_tableaux,
    content_tables,
    eigenvalues,
    extensions,
    idempotent_inductive,
    idempotent_interpolation,
    inductive_checks,
    position_projector,
    sum_formula_checks,
)
from yokonuma.semisimple.seminormal import (
    SeminormalDatum,
    centralizer_dimension,
    corner_dimension,
    extract_gamma,
    jm_subalgebra,
    seminormal_basis,
    verify_seminormal,
)
