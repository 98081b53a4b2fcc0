from yokonuma.cellular.basis import (
    CellularBasis,
    cellular_basis,
    column_shapes,
    framing_subalgebra_checks,
    framing_tableaux,
    initial_row,
    strictly_dominates,
)
from yokonuma.cellular.murphy import (
    CellularBasisElement,
    MurphyDatum,
    factorizations,
    murphy_checks,
    murphy_m_lambda,
    murphy_m_st,
)
from yokonuma.cellular.verify import (
    annihilation_checks,
    jm_eigenvalue,
    lemma_checks,
    row_standard_expansion,
    verify_cellularity,
    verify_jm,
)
