"""Exact polynomial and factored rational-function arithmetic over the rationals."""

from .poly import UniPoly, poly_from_ints, poly_gcd
from .ratfunc import (
    FactoredRatFunc,
    LinFactor,
    ResidueError,
    normalize_factor,
    rf_add,
    rf_evaluate,
    rf_mul,
    rf_neg,
    rf_pole_order,
    rf_residue_simple,
    rf_scale,
    rf_sum,
)

__all__ = [
    "UniPoly",
    "poly_from_ints",
    "poly_gcd",
    "FactoredRatFunc",
    "LinFactor",
    "ResidueError",
    "normalize_factor",
    "rf_add",
    "rf_evaluate",
    "rf_mul",
    "rf_neg",
    "rf_pole_order",
    "rf_residue_simple",
    "rf_scale",
    "rf_sum",
]
