from yokonuma.kernel.context import AlgebraContext, parse_parameters, parse_rational
from yokonuma.kernel.element import Element
from yokonuma.kernel.io import element_from_json, load_element, save_element
from yokonuma.kernel.relations import audit_basis, verify_defining_relations
from yokonuma.kernel.rewriting import RewritingEngine, divided_difference
from yokonuma.kernel.special import (
    SPECIAL_REGISTRY,
    framing_projector,
    make_special,
    set_idempotent,
)
from yokonuma.kernel.tower import (
    TowerDecomposition,
    frobenius_check,
    frobenius_gram,
    theta_checks,
    theta_nondegeneracy,
    theta_projection,
    tower_decomposition_check,
    trace,
)
from yokonuma.kernel.words import Word, dimension, normal_words, word_index
