"""Incomplete-DFA toolkit: state/transition complexity, Boolean-operation
constructions, witness families, bound checks, and a brute-force oracle."""

from .boolean import (
    ProductTag,
    complement,
    intersection_product,
    predicted_union_symbol_count,
    union_product,
    union_product_tags,
)
from .core import (
    Alphabet,
    DfaParseError,
    PartialDfa,
    TransitionCounts,
    ValidationReport,
    accepts,
    check_size_bounds,
    coaccessible,
    empty_language_dfa,
    is_connected,
    parse_dfa,
    reachable,
    render_dfa,
    render_dot,
    transition_counts,
    trim,
    validate,
)
from .minimize import (
    ComplexityReport,
    canonicalize,
    complete_with_sink,
    complexity,
    equivalent,
    minimize,
    pair_equivalent,
)
from .oracle import (
    EnumerationCursor,
    Lemma1Report,
    OracleResult,
    brute_min_transitions,
    enumerate_dfas,
    verify_lemma1,
)
from .witnesses import (
    WitnessFamily,
    WitnessSpec,
    build_witness,
    chain_star_witness,
    epsilon_lang,
    unary_cycle,
    unary_singleton,
    union_multi_witness,
    union_symbol_witness,
    union_total_witness,
)

__all__ = [
    "Alphabet",
    "ComplexityReport",
    "DfaParseError",
    "EnumerationCursor",
    "Lemma1Report",
    "OracleResult",
    "PartialDfa",
    "ProductTag",
    "TransitionCounts",
    "ValidationReport",
    "WitnessFamily",
    "WitnessSpec",
    "accepts",
    "brute_min_transitions",
    "build_witness",
    "canonicalize",
    "chain_star_witness",
    "check_size_bounds",
    "coaccessible",
    "complement",
    "complete_with_sink",
    "complexity",
    "empty_language_dfa",
    "enumerate_dfas",
    "epsilon_lang",
    "equivalent",
    "intersection_product",
    "is_connected",
    "minimize",
    "pair_equivalent",
    "parse_dfa",
    "predicted_union_symbol_count",
    "reachable",
    "render_dfa",
    "render_dot",
    "transition_counts",
    "trim",
    "unary_cycle",
    "unary_singleton",
    "union_multi_witness",
    "union_product",
    "union_product_tags",
    "union_symbol_witness",
    "union_total_witness",
    "validate",
    "verify_lemma1",
]
