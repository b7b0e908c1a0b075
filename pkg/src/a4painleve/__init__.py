"""Rational solutions of the A4 symmetric Painlevé system: exact arithmetic,
Bäcklund transformations, Laurent and residue analysis, classification and
construction."""

from .backlund import (
    ALL_GENERATORS,
    PI,
    PI_INV,
    S,
    Generator,
    apply_gen,
    apply_word,
    apply_word_params,
    check_weyl_relations,
    format_word,
    parse_word,
    shift_operator,
    transport,
    type_action,
)
from .classifier import (
    ClassificationResult,
    classify,
    in_fundamental_set,
    necessary_condition,
    reduce_to_canonical,
)
from .constructor import Inconclusive, construct, construct_with_word, seed_solution, transport_audit
from .hamiltonian import emit_tables, h_full, h_inf_minus1, hhat, residue_balance
from .laurent import InfinityType, classify_infinity, finite_pole_audit, predicted_profile, recurrence_expand
from .system import ConstraintError, ParamVec, SolutionTuple, is_odd, negate_t, verify_solution

__all__ = [
    "ALL_GENERATORS", "PI", "PI_INV", "S", "Generator", "apply_gen", "apply_word",
    "apply_word_params", "check_weyl_relations", "format_word", "parse_word",
    "shift_operator", "transport", "type_action",
    "ClassificationResult", "classify", "in_fundamental_set", "necessary_condition",
    "reduce_to_canonical",
    "Inconclusive", "construct", "construct_with_word", "seed_solution", "transport_audit",
    "emit_tables", "h_full", "h_inf_minus1", "hhat", "residue_balance",
    "InfinityType", "classify_infinity", "finite_pole_audit", "predicted_profile",
    "recurrence_expand",
    "ConstraintError", "ParamVec", "SolutionTuple", "is_odd", "negate_t", "verify_solution",
]
