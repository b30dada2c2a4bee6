"""Euler's rational functions ``R_k``, their numerators ``P_k`` and polylogarithms.

For every integer ``k`` we use ``R_k(z) = -sum_{n>=1} n^(k-1) z^n``.  For
``k >= 1`` this is the rational function ``-z P_k(z) / (1 - z)^k``; for
``k <= 0`` it is ``-Li_{1-k}(z)``, the unique continuation of the recurrence
``R_{k+1} = z R_k'`` with ``R_k(0) = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import ONE, ZERO, Poly, RationalFunction
from .series import SeriesWindow, TruncatedLaurentSeries

__all__ = [
    "EulerNumerator",
    "check_functional_equation",
    "euler_P",
    "euler_R_rational",
    "euler_R_series",
    "euler_table",
    "polylog_series",
    "render_euler_R",
]


@dataclass(frozen=True)
class EulerNumerator:
    k: int
    poly: Poly

    @property
    def coefficients(self) -> list[int]:
        return [int(c.re) for c in self.poly.coeffs]


@lru_cache(maxsize=None)
def _numerator(k: int) -> Poly:
    if k == 1:
        return Poly([ONE])
    p = _numerator(k - 1)
    j = k - 1
    # P_{j+1} = (1 + (j-1) z) P_j + z (1 - z) P_j'
    return Poly([1, j - 1]) * p + Poly([0, 1, -1]) * p.derivative()


def euler_P(k: int) -> EulerNumerator:
    """Numerator polynomial ``P_k`` from the recurrence starting at ``P_1 = 1``."""
    if k < 1:
        raise ValueError("euler_P needs k >= 1; use euler_R_series for k <= 0")
    return EulerNumerator(k, _numerator(k))


def euler_R_rational(k: int) -> RationalFunction:
    """``R_k = -z P_k(z) / (1 - z)^k`` in reduced form."""
    if k < 1:
        raise ValueError("R_k is rational only for k >= 1")
    return RationalFunction(Poly([0, -1]) * _numerator(k), Poly([1, -1]) ** k)


def euler_R_series(k: int, window: SeriesWindow | None = None) -> TruncatedLaurentSeries:
    """Coefficients ``c_0 = 0`` and ``c_n = -n^(k-1)``, exact for every integer ``k``."""
    if window is None:
        window = SeriesWindow()
    return TruncatedLaurentSeries.from_function(
        lambda n: -(Fraction(n) ** (k - 1)) if n >= 1 else ZERO, window
    )


def polylog_series(k: int, window: SeriesWindow | None = None) -> TruncatedLaurentSeries:
    """Truncation of ``Li_k(z) = sum n^-k z^n``."""
    if k < 1:
        raise ValueError("polylog_series needs k >= 1")
    if window is None:
        window = SeriesWindow()
    return TruncatedLaurentSeries.from_function(lambda n: Fraction(1, n**k) if n >= 1 else ZERO, window)


def check_functional_equation(k: int, numerator: Poly | None = None) -> bool:
    """Whether ``R(1/z) = (-1)^k R(z)`` holds for ``R = -z P(z)/(1-z)^k``.

    ``numerator`` defaults to ``P_k``; pass a modified polynomial for a
    negative control.  Checked by cross-multiplying polynomials.
    """
    p = _numerator(k) if numerator is None else numerator
    num = Poly([0, -1]) * p
    den = Poly([1, -1]) ** k
    n = max(num.degree, den.degree)
    num_inv, den_inv = num.reverse(n), den.reverse(n)
    sign = 1 if k % 2 == 0 else -1
    return num_inv * den == (num * den_inv).scale(sign)


def _render_ascending(p: Poly) -> str:
    terms = []
    for n, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        v = int(c.re)
        mono = "" if n == 0 else "z" if n == 1 else f"z^{n}"
        body = str(abs(v)) if not mono else mono if abs(v) == 1 else f"{abs(v)}{mono}"
        sign = "-" if v < 0 else "+"
        terms.append(body if not terms and v > 0 else f"{sign}{body}")
    return "".join(terms)


def render_euler_R(k: int) -> str:
    """Euler's presentation, e.g. ``-z(1+4z+z^2)/(1-z)^4``."""
    p = _numerator(k)
    head = "-z" if p.degree == 0 else f"-z({_render_ascending(p)})"
    den = "(1-z)" if k == 1 else f"(1-z)^{k}"
    return f"{head}/{den}"


def euler_table(kmax: int) -> list[dict]:
    """Rows ``{"k", "P", "R"}`` for ``k = 1..kmax``."""
    return [
        {"k": k, "P": euler_P(k).coefficients, "R": render_euler_R(k)}
        for k in range(1, kmax + 1)
    ]
