"""Exact arithmetic substrate: Q(i) scalars, polynomials, rational functions."""

from .poly import X, Poly, render_poly
from .rational import (
    PolarDecomposition,
    RationalFunction,
    laurent_at,
    partial_fractions,
    polar_order,
    rational_reduce,
    render_rational,
    residue,
)
from .roots import PoleOutsideFieldError, gaussian_roots
from .scalar import I, ONE, ZERO, GaussianRational, as_scalar, parse_scalar

__all__ = [
    "GaussianRational",
    "I",
    "ONE",
    "PolarDecomposition",
    "PoleOutsideFieldError",
    "Poly",
    "RationalFunction",
    "X",
    "ZERO",
    "as_scalar",
    "gaussian_roots",
    "laurent_at",
    "parse_scalar",
    "partial_fractions",
    "polar_order",
    "rational_reduce",
    "render_poly",
    "render_rational",
    "residue",
]
