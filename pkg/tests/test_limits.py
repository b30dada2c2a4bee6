import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ene.transalg import INF, transalg_make
from ene.limits import (
    ConvergenceError,
    RegionError,
    SampleRegion,
    aberth_roots,
    chordal_distance,
    collapse_witness,
    euler_limit_error,
    euler_limit_study,
    euler_limit_values,
    hausdorff_distance,
)

finite = st.complex_numbers(max_magnitude=50, allow_nan=False, allow_infinity=False)
points = st.one_of(finite, st.just(INF))
point_sets = st.lists(points, min_size=1, max_size=5)

STOCK_REGION = SampleRegion(((0, 0.4, 64), (0, 3.0, 64)))


@pytest.fixture
def stock(z):
    return transalg_make(1 - z / 2, 1 / (1 - z))


# metric ------------------------------------------------------------------------------


def test_chordal_examples():
    assert chordal_distance(0, 0.75) == pytest.approx(2 * 0.75 / math.sqrt(1 + 0.75**2))
    assert chordal_distance(0, INF) == pytest.approx(2.0)
    assert chordal_distance(INF, INF) == 0.0
    assert chordal_distance(1e8, INF) < 1e-7


def test_chordal_matches_stereographic_projection():
    # the chord between images on the sphere of diameter 1 is half the chordal distance
    def lift(w):
        d = 1 + abs(w) ** 2
        return np.array([w.real / d, w.imag / d, abs(w) ** 2 / d])

    for a, b in [(0.3 + 2j, -1 - 0.5j), (5j, 0.1)]:
        assert np.linalg.norm(lift(a) - lift(b)) == pytest.approx(chordal_distance(a, b) / 2)


@given(point_sets, point_sets, point_sets)
def test_hausdorff_is_a_metric(A, B, C):
    assert hausdorff_distance(A, A) == 0.0
    assert hausdorff_distance(A, B) == pytest.approx(hausdorff_distance(B, A))
    assert hausdorff_distance(A, C) <= hausdorff_distance(A, B) + hausdorff_distance(B, C) + 1e-12


def test_hausdorff_examples():
    assert hausdorff_distance([0], [0.75]) == pytest.approx(chordal_distance(0, 0.75))
    assert hausdorff_distance([0, INF], [INF, 0]) == 0.0
    with pytest.raises(ValueError):
        hausdorff_distance([], [1])


# regions ----------------------------------------------------------------------------


def test_region_parse_and_points():
    r = SampleRegion.parse("circle:0,0,1,8; rect:-1,-1,1,1,3,3", epsilon=0.2)
    pts = r.points()
    assert len(pts) == 17 and r.epsilon == 0.2
    assert np.allclose(abs(pts[:8]), 1)
    with pytest.raises(ValueError, match="bad grid item"):
        SampleRegion.parse("square:1,2")
    with pytest.raises(RegionError):
        SampleRegion().points()


def test_region_exclusion(z, stock):
    bad = SampleRegion(((0, 1.0, 16),))
    with pytest.raises(RegionError, match="region violates exclusion"):
        euler_limit_error(stock, 64, bad)


# Euler limits ----------------------------------------------------------------------------


def test_rational_limit_is_exact(z):
    f = transalg_make((z - 2) / (z + 1))
    for k in (1, 7, 64):
        assert euler_limit_error(f, k, STOCK_REGION) == 0.0


def test_exp_limit_against_direct_evaluation(z):
    f = transalg_make(1, z)
    zs = np.exp(2j * np.pi * np.arange(32) / 32)
    approx, exact = euler_limit_values(f, 64, zs)
    direct = np.array([(1 + w / 64) ** 64 for w in zs])
    assert np.allclose(approx, direct, rtol=1e-12)
    assert np.allclose(exact, np.exp(zs))
    errs = [euler_limit_error(f, k, SampleRegion(((0, 1.0, 64),))) for k in (64, 128)]
    assert errs[1] < errs[0] < math.e / (2 * 64) * 1.5


def test_large_k_is_stable(z):
    f = transalg_make(1, z)
    approx, exact = euler_limit_values(f, 10**9, np.array([0.5 + 0.5j]))
    assert abs(approx[0] - exact[0]) < 1e-7


@pytest.mark.parametrize("which", ["exp", "stock"])
def test_error_halves(z, stock, which):
    f = transalg_make(1, z) if which == "exp" else stock
    report = euler_limit_study(f, (64, 128, 256, 512), STOCK_REGION)
    assert all(0.35 <= r <= 0.65 for r in report.ratios())
    assert report.decay_exponent == pytest.approx(-1, abs=0.1)


def test_study_rejects_unsorted(z):
    with pytest.raises(ValueError):
        euler_limit_study(transalg_make(1, z), (128, 64), STOCK_REGION)


# collapse ---------------------------------------------------------------------------------


def test_collapse_at_simple_singularity(z):
    f = transalg_make(1, 1 / (1 - z))
    report = collapse_witness(f, 100)
    (cluster,) = report.clusters
    assert cluster.point == 1
    (zero, mult), = cluster.zeros
    assert abs(zero - 1.01) < 1e-9 and mult == 100
    assert cluster.poles == ((1 + 0j, 100),)
    assert cluster.distinct_locations >= 2
    assert cluster.max_distance() < 0.02


def test_collapse_counts_meet_order_bound(z):
    for d in (1, 2, 3):
        f = transalg_make(1, 1 / (1 - z) ** d)
        (cluster,) = collapse_witness(f, 200).clusters
        assert cluster.distinct_locations >= d + 1


def test_collapse_rational_is_empty(z):
    assert collapse_witness(transalg_make(z - 1), 50).zeros == ()


def test_exp_zero_escapes_to_infinity(z):
    f = transalg_make(1, z)
    dists = []
    for k in (10, 100, 1000):
        report = collapse_witness(f, k)
        (zero, mult), = report.zeros
        assert zero == pytest.approx(-k) and mult == k
        assert report.poles == ((INF, k),)
        dists.append(chordal_distance(zero, INF))
    assert dists == sorted(dists, reverse=True)


def test_hausdorff_to_limit_support_shrinks(z):
    f = transalg_make(1, 1 / (1 - z))
    report = euler_limit_study(f, (16, 32, 64, 128), SampleRegion(((0, 0.4, 32), (0, 3.0, 32))))
    h = list(report.hausdorff)
    assert h == sorted(h, reverse=True) and h[-1] < 0.02


# root finding ------------------------------------------------------------------------------


@given(st.lists(st.complex_numbers(min_magnitude=0.1, max_magnitude=5, allow_nan=False), min_size=1, max_size=6,
                unique=True))
def test_aberth_matches_numpy(roots):
    if min((abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:]), default=1) < 1e-2:
        return
    coeffs = np.poly(roots)[::-1]
    found = aberth_roots(coeffs)
    oracle = np.roots(coeffs[::-1])
    assert len(found) == len(oracle)
    for r in oracle:
        assert min(abs(found - r)) < 1e-6 * max(1, abs(r))


def test_aberth_diagnostics():
    with pytest.raises(ConvergenceError, match="did not converge"):
        aberth_roots([1, 0, 0, 0, 0, 0, 1], max_iter=1)
    assert len(aberth_roots([5])) == 0
    assert cmath.isclose(aberth_roots([-2, 1])[0], 2)
