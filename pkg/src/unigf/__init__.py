"""Exact engine for the unified four-parameter set-partition polynomials."""
from .polyring import MPoly
from .series import FPSeries, unified_F_series
from .unified import (ParamPoint, coeff_triangle, explicit_coeff, stirling1_unsigned, stirling2,
                      u_poly_conv, u_poly_explicit, u_poly_main)
from .enumeration import LLPartition, StatVector, enumerate_llp, s_poly_bruteforce, s_poly_rec

__all__ = [
    "MPoly", "FPSeries", "ParamPoint", "LLPartition", "StatVector",
    "unified_F_series", "coeff_triangle", "explicit_coeff", "stirling1_unsigned", "stirling2",
    "u_poly_conv", "u_poly_explicit", "u_poly_main",
    "enumerate_llp", "s_poly_bruteforce", "s_poly_rec",
]
