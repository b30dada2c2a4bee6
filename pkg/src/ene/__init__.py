"""Exact eñe products on transalgebraic functions of the Riemann sphere."""

from .algebra import (
    GaussianRational,
    Poly,
    PoleOutsideFieldError,
    RationalFunction,
    gaussian_roots,
    laurent_at,
    partial_fractions,
    polar_order,
    residue,
)
from .core import NormalizedSeries, RootDivisor, ene_exp, ene_roots, ene_series, poly_from_divisor, universal_coeff_residual
from .euler import check_functional_equation, euler_P, euler_R_rational, euler_R_series, euler_table, polylog_series
from .limits import (
    SampleRegion,
    chordal_distance,
    collapse_witness,
    euler_limit_error,
    euler_limit_study,
    hausdorff_distance,
)
from .series import SeriesWindow, TruncatedLaurentSeries, series_exp, series_log, series_mul, series_of_rational
from .transalg import (
    INF,
    EneSymbol,
    GeneratorFactorization,
    NormalizedExponential,
    TransalgebraicDivisor,
    TransalgebraicFunction,
    degree_profile,
    ene_symbols,
    ene_transalg,
    exponent_series,
    factor_generators,
    transalg_divisor,
    transalg_log_derivative,
    transalg_order,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "EneSymbol",
    "GaussianRational",
    "GeneratorFactorization",
    "NormalizedExponential",
    "NormalizedSeries",
    "Poly",
    "PoleOutsideFieldError",
    "RationalFunction",
    "RootDivisor",
    "SampleRegion",
    "SeriesWindow",
    "TransalgebraicDivisor",
    "TransalgebraicFunction",
    "TruncatedLaurentSeries",
    "check_functional_equation",
    "chordal_distance",
    "collapse_witness",
    "degree_profile",
    "ene_exp",
    "ene_roots",
    "ene_series",
    "ene_symbols",
    "ene_transalg",
    "euler_P",
    "euler_R_rational",
    "euler_R_series",
    "euler_limit_error",
    "euler_limit_study",
    "euler_table",
    "exponent_series",
    "factor_generators",
    "gaussian_roots",
    "hausdorff_distance",
    "laurent_at",
    "partial_fractions",
    "polar_order",
    "poly_from_divisor",
    "polylog_series",
    "residue",
    "series_exp",
    "series_log",
    "series_mul",
    "series_of_rational",
    "transalg_divisor",
    "transalg_log_derivative",
    "transalg_order",
    "universal_coeff_residual",
]
