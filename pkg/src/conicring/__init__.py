"""Exact arithmetic in the subring of the Grothendieck ring generated by smooth conics over Q."""

from .brauer import (
    TRIVIAL_CLASS,
    TRIVIAL_SUBGROUP,
    BrauerClass,
    Subgroup,
    TransvectionOp,
    class_add,
    contains,
    join,
    reduce_generators,
    replay,
    span,
    subgroup_leq,
)
from .conics import (
    DEFAULT_SEARCH_BOUND,
    Conic,
    ProjPoint,
    QuadExtElem,
    admits_rational_map,
    brauer_class,
    brauer_product,
    common_splitting_discriminant,
    conic_from_class,
    has_rational_point,
    is_isomorphic,
    new_conic,
    phi_forward,
    point_over_splitting_field,
    rational_point,
    rewrite_with_discriminant,
    sqrt_of,
)
from .errors import (
    ConicRingError,
    FactorBoundExceeded,
    InvalidConic,
    ParseError,
    ResourceBoundExceeded,
    SearchBoundExceeded,
    ZeroElement,
)
from .gring import (
    IDENTITY_TERM,
    ConicProduct,
    Decision,
    RingElement,
    Term,
    canonical_of_product,
    decide_equal_products,
    decide_stably_birational,
    from_conic_product,
    leading_term,
    power_coefficient_check,
    render_element,
    term_mul,
)
from .numtheory import (
    DEFAULT_FACTOR_BOUND,
    Place,
    Rational,
    candidate_places,
    factor,
    hilbert_symbol,
    is_prime,
    legendre,
    parse_rational,
    squarefree_part,
)
from .ringexpr import parse_ring_expression

__version__ = "0.1.0"

__all__ = [
    "BrauerClass", "Conic", "ConicProduct", "ConicRingError", "Decision",
    "DEFAULT_FACTOR_BOUND", "DEFAULT_SEARCH_BOUND", "FactorBoundExceeded",
    "IDENTITY_TERM", "InvalidConic", "ParseError", "Place", "ProjPoint",
    "QuadExtElem", "Rational", "ResourceBoundExceeded", "RingElement",
    "SearchBoundExceeded", "Subgroup", "Term", "TransvectionOp",
    "TRIVIAL_CLASS", "TRIVIAL_SUBGROUP", "ZeroElement",
    "admits_rational_map", "brauer_class", "brauer_product",
    "candidate_places", "canonical_of_product", "class_add",
    "common_splitting_discriminant", "conic_from_class", "contains",
    "decide_equal_products", "decide_stably_birational", "factor",
    "from_conic_product", "has_rational_point", "hilbert_symbol",
    "is_isomorphic", "is_prime", "join", "leading_term", "legendre",
    "new_conic", "parse_rational", "parse_ring_expression", "phi_forward",
    "point_over_splitting_field", "power_coefficient_check",
    "rational_point", "reduce_generators", "render_element", "replay",
    "rewrite_with_discriminant", "span", "sqrt_of", "squarefree_part",
    "subgroup_leq", "term_mul",
]
