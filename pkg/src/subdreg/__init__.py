"""Certified Hoelder regularity of symmetric univariate subdivision schemes."""

__version__ = "0.1.0"

from .families import FamilyId, Kind, b_spoly, dual_symbol, primal_symbol  # noqa: E402
from .laurent import LaurentPoly, SymmetricMask, center_symmetric, extract_one_plus_z  # noqa: E402
from .regularity import (  # noqa: E402
    RegularityReport,
    RhoEnclosure,
    analyze,
    build_matrix_folded,
    build_matrix_large,
    build_matrix_transpose,
    char_poly,
    family_report,
    regularity_table,
    spectral_radius,
)
from .trig import SPoly, positivity, to_s_poly  # noqa: E402

__all__ = [
    "FamilyId",
    "Kind",
    "LaurentPoly",
    "RegularityReport",
    "RhoEnclosure",
    "SPoly",
    "SymmetricMask",
    "analyze",
    "b_spoly",
    "build_matrix_folded",
    "build_matrix_large",
    "build_matrix_transpose",
    "center_symmetric",
    "char_poly",
    "dual_symbol",
    "extract_one_plus_z",
    "family_report",
    "positivity",
    "primal_symbol",
    "regularity_table",
    "spectral_radius",
    "to_s_poly",
]
