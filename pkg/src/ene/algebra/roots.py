"""Exact roots in Q(i) of polynomials that split over the Gaussian rationals.

Roots are located numerically, polished by Newton steps carried out in exact
dyadic arithmetic, snapped to nearby small-denominator Gaussian rationals and
then *verified exactly*.  Nothing approximate survives: a candidate that is
not an exact root is discarded, and a polynomial whose roots are not all
recovered raises :class:`PoleOutsideFieldError`.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .poly import Poly
from .scalar import ONE, ZERO, GaussianRational

__all__ = ["PoleOutsideFieldError", "gaussian_roots"]

_PRECISION_BITS = 256
_DENOMINATOR_BOUNDS = (2**12, 2**24, 2**48, 2**80)


class PoleOutsideFieldError(ValueError):
    """A polynomial has a factor that is irreducible over the Gaussian rationals."""

    def __init__(self, poly: Poly):
        super().__init__(f"pole outside scalar field: {poly} does not split over Q(i)")
        self.poly = poly


def _round_dyadic(x: Fraction, bits: int = _PRECISION_BITS) -> Fraction:
    scale = 1 << bits
    return Fraction(round(x * scale), scale)


def _polish(p: Poly, dp: Poly, guess: complex) -> GaussianRational | None:
    x = GaussianRational(Fraction(guess.real), Fraction(guess.imag))
    for _ in range(10):
        d = dp(x)
        if d.is_zero():
            return None
        step = p(x) / d
        x = x - step
        x = GaussianRational(_round_dyadic(x.re), _round_dyadic(x.im))
        if step.norm() < Fraction(1, 1 << (2 * _PRECISION_BITS - 8)):
            break
    return x


def _snap(x: GaussianRational, p: Poly) -> GaussianRational | None:
    for bound in _DENOMINATOR_BOUNDS:
        cand = GaussianRational(x.re.limit_denominator(bound), x.im.limit_denominator(bound))
        if p(cand).is_zero():
            return cand
    return None


def _split_squarefree(p: Poly) -> list[GaussianRational]:
    """Distinct roots of a monic squarefree ``p``; raises if ``p`` does not split."""
    found: list[GaussianRational] = []
    rest = p
    while rest.degree > 1:
        coeffs = [complex(c) for c in reversed(rest.coeffs)]
        approx = np.roots(np.array(coeffs, dtype=complex))
        drest = rest.derivative()
        hit = None
        # smallest roots first keeps the exact deflation well conditioned
        for guess in sorted(approx, key=lambda g: abs(g)):
            polished = _polish(rest, drest, complex(guess))
            if polished is None:
                continue
            hit = _snap(polished, rest)
            if hit is not None:
                break
        if hit is None:
            raise PoleOutsideFieldError(p)
        found.append(hit)
        rest = rest.exact_div(Poly([-hit, ONE]))
    if rest.degree == 1:
        found.append(-rest.coeffs[0] / rest.coeffs[1])
    return found


def gaussian_roots(p: Poly) -> dict[GaussianRational, int]:
    """Map each root of ``p`` to its multiplicity.

    >>> gaussian_roots(Poly([1, 0, 1]))  # z^2 + 1
    {GaussianRational('-i'): 1, GaussianRational('i'): 1}
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    roots: dict[GaussianRational, int] = {}
    v = p.valuation()
    body = p
    if v > 0:
        roots[ZERO] = v
        body = Poly(p.coeffs[v:])
    if body.degree < 1:
        return roots
    sqf = body.squarefree_part()
    distinct = _split_squarefree(sqf)
    for r in distinct:
        lin = Poly([-r, ONE])
        m = 0
        while body.degree >= 1:
            q, rem = body.divmod(lin)
            if not rem.is_zero():
                break
            body = q
            m += 1
        roots[r] = m
    if body.degree != 0:  # pragma: no cover - guarded by the squarefree split
        raise PoleOutsideFieldError(p)
    return dict(sorted(roots.items(), key=lambda kv: kv[0].sort_key()))
