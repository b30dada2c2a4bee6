"""Numerical experiments with Euler limits ``f_k = R0 (1 + R1/k)^k``.

Distances on the sphere use the chordal metric, with ``INF`` as an
ordinary point.  Grids are deterministic and must keep a chordal distance
of at least ``epsilon`` from the support of the divisor of ``f``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .algebra import Poly, RationalFunction, gaussian_roots
from .transalg import INF, TransalgebraicFunction, transalg_divisor

__all__ = [
    "CollapseReport",
    "ConvergenceError",
    "ConvergenceReport",
    "RegionError",
    "SampleRegion",
    "SingularityCluster",
    "aberth_roots",
    "chordal_distance",
    "collapse_witness",
    "euler_limit_error",
    "euler_limit_study",
    "euler_limit_values",
    "hausdorff_distance",
    "support_points",
]


class RegionError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


# sphere geometry -------------------------------------------------------------------


def chordal_distance(a, b) -> float:
    """``2|a-b| / sqrt((1+|a|^2)(1+|b|^2))``, and ``2/sqrt(1+|a|^2)`` against ``INF``."""
    if a is INF and b is INF:
        return 0.0
    if a is INF:
        a, b = b, a
    a = complex(a)
    if b is INF:
        return 2.0 / math.sqrt(1.0 + abs(a) ** 2)
    b = complex(b)
    return 2.0 * abs(a - b) / math.sqrt((1.0 + abs(a) ** 2) * (1.0 + abs(b) ** 2))


def hausdorff_distance(A, B) -> float:
    A, B = list(A), list(B)
    if not A or not B:
        raise ValueError("hausdorff distance needs nonempty sets")
    forward = max(min(chordal_distance(a, b) for b in B) for a in A)
    backward = max(min(chordal_distance(a, b) for a in A) for b in B)
    return max(forward, backward)


def support_points(f: TransalgebraicFunction) -> list:
    """Support of the divisor of ``f`` as complex numbers and ``INF``."""
    div = transalg_divisor(f)
    return [p if p is INF else complex(p) for p in sorted(div.support(), key=_support_key)]


def _support_key(p):
    return (1, 0, 0) if p is INF else (0, *p.sort_key())


# sample grids ------------------------------------------------------------------------


@dataclass(frozen=True)
class SampleRegion:
    """Circles ``(center, radius, count)`` and rectangles ``(x0, y0, x1, y1, nx, ny)``."""

    circles: tuple = ()
    rects: tuple = ()
    epsilon: float = 0.1

    def points(self) -> np.ndarray:
        chunks = []
        for center, radius, count in self.circles:
            t = 2.0 * np.pi * np.arange(int(count)) / int(count)
            chunks.append(complex(center) + radius * np.exp(1j * t))
        for x0, y0, x1, y1, nx, ny in self.rects:
            xs = np.linspace(x0, x1, int(nx))
            ys = np.linspace(y0, y1, int(ny))
            chunks.append((xs[None, :] + 1j * ys[:, None]).ravel())
        if not chunks:
            raise RegionError("empty sample region")
        return np.concatenate(chunks)

    def check(self, support) -> None:
        for z in self.points():
            for p in support:
                if chordal_distance(z, p) < self.epsilon:
                    raise RegionError(
                        f"region violates exclusion: sample {z:.6g} within {self.epsilon} of {p}"
                    )

    @classmethod
    def parse(cls, spec: str, epsilon: float = 0.1) -> SampleRegion:
        """Parse ``circle:cx,cy,r,n`` and ``rect:x0,y0,x1,y1,nx,ny`` items joined by ``;``."""
        circles, rects = [], []
        for item in filter(None, (s.strip() for s in spec.split(";"))):
            kind, _, body = item.partition(":")
            try:
                nums = [float(x) for x in re.split(r"\s*,\s*", body.strip())]
            except ValueError:
                raise ValueError(f"bad grid item {item!r}") from None
            if kind == "circle" and len(nums) == 4:
                circles.append((complex(nums[0], nums[1]), nums[2], int(nums[3])))
            elif kind == "rect" and len(nums) == 6:
                rects.append((*nums[:4], int(nums[4]), int(nums[5])))
            else:
                raise ValueError(f"bad grid item {item!r}")
        return cls(tuple(circles), tuple(rects), epsilon)


# evaluation ----------------------------------------------------------------------------


def _coeff_array(p: Poly) -> np.ndarray:
    """Highest degree first, for ``np.polyval``."""
    return np.array([complex(c) for c in reversed(p.coeffs)] or [0j], dtype=complex)


def _eval_rational(r: RationalFunction, z: np.ndarray) -> np.ndarray:
    return np.polyval(_coeff_array(r.num), z) / np.polyval(_coeff_array(r.den), z)


def _log1p(w: np.ndarray) -> np.ndarray:
    # log(u) * w / (u - 1) cancels the rounding in u = 1 + w
    u = 1.0 + w
    d = u - 1.0
    out = np.array(w, dtype=complex)
    mask = d != 0
    out[mask] = np.log(u[mask]) * w[mask] / d[mask]
    return out


def _euler_power(x: np.ndarray, k: int) -> np.ndarray:
    """``(1 + x/k)^k``: ``exp(k log1p(x/k))`` for ``|x/k| < 1/2``, integer power otherwise.

    The base stays in ``Re > 1/2`` on the first branch, far from the cut of
    the logarithm; elsewhere Python's integer power (repeated squaring) is
    used on the exact base.
    """
    w = x / k
    out = np.empty_like(w)
    near = np.abs(w) < 0.5
    out[near] = np.exp(k * _log1p(w[near]))
    out[~near] = np.array([(1 + v) ** k for v in w[~near]], dtype=complex)
    return out


def euler_limit_values(f: TransalgebraicFunction, k: int, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``(f_k(z), f(z))`` on an array of points."""
    if k < 1:
        raise ValueError("k must be at least 1")
    r0 = _eval_rational(f.rat, z)
    if f.exp.is_zero():
        return r0, r0
    x = _eval_rational(f.exp, z)
    return r0 * _euler_power(x, k), r0 * np.exp(x)


def euler_limit_error(f: TransalgebraicFunction, k: int, region: SampleRegion) -> float:
    """Sup-norm error ``max |f_k - f|`` over the grid."""
    region.check(support_points(f))
    z = region.points()
    fk, fz = euler_limit_values(f, k, z)
    err = np.abs(fk - fz)
    if not np.all(np.isfinite(err)):
        raise RegionError("region violates exclusion: non-finite value on the grid")
    return float(err.max())


# root finding ----------------------------------------------------------------------------


def aberth_roots(coeffs, tol: float = 1e-10, max_iter: int = 500) -> np.ndarray:
    """All roots of ``sum coeffs[j] z^j`` by Aberth-Ehrlich iteration.

    Starts from a deterministic circle of radius set by the Cauchy bound.
    """
    c = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
    n = len(c) - 1
    if n < 1:
        return np.empty(0, dtype=complex)
    c = c / c[-1]
    if n == 1:
        return np.array([-c[0]])
    high = c[::-1]
    dhigh = np.polyder(high)
    radius = 1.0 + np.max(np.abs(c[:-1]))
    z = radius * np.exp(1j * (2.0 * np.pi * np.arange(n) / n + 0.4))
    step = np.zeros(n)
    for _ in range(max_iter):
        p = np.polyval(high, z)
        dp = np.polyval(dhigh, z)
        ratio = np.divide(p, dp, out=np.zeros_like(p), where=(p != 0))
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        step = ratio / (1.0 - ratio * inv.sum(axis=1))
        z = z - step
        if np.max(np.abs(step)) <= tol * max(1.0, np.max(np.abs(z))):
            return z
    raise ConvergenceError(
        f"root iteration did not converge after {max_iter} steps "
        f"(degree {n}, last step {np.max(np.abs(step)):.3e})"
    )


def _cluster(points, tol: float = 1e-6) -> list[tuple[complex, int]]:
    groups: list[list] = []
    for p in sorted(points, key=lambda x: (x.real, x.imag)):
        for g in groups:
            if abs(g[0] - p) < tol:
                g[1] += 1
                break
        else:
            groups.append([p, 1])
    return [(complex(p), m) for p, m in groups]


# collapse witness -----------------------------------------------------------------------


@dataclass(frozen=True)
class SingularityCluster:
    """Zeros and poles of ``f_k`` attached to one exponential singularity."""

    point: object
    zeros: tuple
    poles: tuple

    @property
    def distinct_locations(self) -> int:
        return len(self.zeros) + len(self.poles)

    def max_distance(self) -> float:
        pts = [p for p, _ in self.zeros] + [p for p, _ in self.poles]
        return max((chordal_distance(p, self.point) for p in pts), default=0.0)


@dataclass(frozen=True)
class CollapseReport:
    k: int
    zeros: tuple = ()
    poles: tuple = ()
    clusters: tuple = ()

    def support(self) -> list:
        return [p for p, _ in self.zeros] + [p for p, _ in self.poles]


def collapse_witness(f: TransalgebraicFunction, k: int, tol: float = 1e-10) -> CollapseReport:
    """Zeros and poles of ``f_k`` that come from the exponential factor.

    Zeros solve ``num1 + k den1 = 0`` and poles are the roots of ``den1``
    (plus ``INF`` when ``R1`` has a polynomial part), each repeated ``k``
    times by the power.  Every location is attached to
    the nearest exponential singularity of ``f`` in the chordal metric.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    exp = f.exp
    if exp.is_zero():
        return CollapseReport(k)
    num, den = exp.num, exp.den
    target = num + den.scale(k)
    zero_roots = aberth_roots([complex(c) for c in target.coeffs], tol)
    zeros = [(p, m * k) for p, m in _cluster(zero_roots)]
    poles = []
    if den.degree > 0:
        poles = [(complex(p), m * k) for p, m in gaussian_roots(den).items()]
    # 1 + R1/k grows like z^gap at infinity
    gap = target.degree - den.degree
    if gap > 0:
        poles.append((INF, gap * k))
    singular = [p if p is INF else complex(p) for p in sorted(transalg_divisor(f).singular_set, key=_support_key)]
    buckets = {i: ([], []) for i in range(len(singular))}
    for side, items in ((0, zeros), (1, poles)):
        for p, m in items:
            i = min(range(len(singular)), key=lambda j: chordal_distance(p, singular[j]))
            buckets[i][side].append((p, m))
    clusters = tuple(
        SingularityCluster(singular[i], tuple(zs), tuple(ps)) for i, (zs, ps) in buckets.items()
    )
    return CollapseReport(k, tuple(zeros), tuple(poles), clusters)


# convergence study ------------------------------------------------------------------------


@dataclass(frozen=True)
class ConvergenceReport:
    ks: tuple
    errors: tuple
    decay_exponent: float
    hausdorff: tuple = field(default=())

    def ratios(self) -> list:
        """Successive error ratios; ``None`` where the earlier error is exactly 0."""
        return [b / a if a else None for a, b in zip(self.errors, self.errors[1:])]


def euler_limit_study(f: TransalgebraicFunction, ks, region: SampleRegion) -> ConvergenceReport:
    """Errors at each ``k``, the fitted slope of ``log error`` against ``log k``,
    and Hausdorff distances between the collapsing support and the limit support."""
    ks = tuple(int(k) for k in ks)
    if any(b <= a for a, b in zip(ks, ks[1:])):
        raise ValueError("k values must be strictly increasing")
    errors = tuple(euler_limit_error(f, k, region) for k in ks)
    positive = [(k, e) for k, e in zip(ks, errors) if e > 0]
    slope = float("nan")
    if len(positive) >= 2:
        lk = np.log([k for k, _ in positive])
        le = np.log([e for _, e in positive])
        slope = float(np.polyfit(lk, le, 1)[0])
    hausdorff: tuple = ()
    if not f.exp.is_zero():
        limit = support_points(f)
        dists = []
        for k in ks:
            report = collapse_witness(f, k)
            alg = [p if p is INF else complex(p) for p in transalg_divisor(TransalgebraicFunction(f.rat)).support()]
            dists.append(hausdorff_distance(report.support() + alg, limit))
        hausdorff = tuple(dists)
    return ConvergenceReport(ks, errors, slope, hausdorff)
