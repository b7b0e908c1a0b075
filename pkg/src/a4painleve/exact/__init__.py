"""Exact arithmetic over Q: polynomials, rational functions, Laurent expansions."""

from fractions import Fraction

from .factors import (
    denominator_factors,
    gcd_free_basis,
    pole_order,
    principal_residue_sum,
    residue_polynomial,
    residue_sum_over_factor,
    trace_mod,
)
from .limits import DegreeCapExceeded, caps, configure
from .parse import ParseError, parse_rational, parse_rational_function
from .poly import Polynomial, poly_gcd, squarefree_decomposition
from .ratfunc import ONE_RF, T_RF, ZERO_RF, RationalFunction, const, format_rational_function
from .roots import rational_roots
from .series import INFINITY, LaurentSeries, TruncationError, expand, residue_at, residue_at_infinity

__all__ = [
    "Fraction", "Polynomial", "RationalFunction", "LaurentSeries", "INFINITY",
    "ParseError", "TruncationError", "DegreeCapExceeded",
    "caps", "configure", "const", "denominator_factors", "expand", "format_rational_function",
    "gcd_free_basis", "parse_rational", "parse_rational_function", "pole_order",
    "poly_gcd", "principal_residue_sum", "rational_roots", "residue_at",
    "residue_at_infinity", "residue_polynomial", "residue_sum_over_factor",
    "squarefree_decomposition", "trace_mod", "ONE_RF", "T_RF", "ZERO_RF",
]
