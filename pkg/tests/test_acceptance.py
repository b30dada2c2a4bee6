"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is printed in the terminal summary.
"""

import io
import random
import time
from fractions import Fraction
from math import factorial
from pathlib import Path

import pytest

from ene.algebra import ONE, GaussianRational, Poly, RationalFunction, polar_order, residue
from ene.cli.main import main
from ene.cli.verify import PARAM_POOL, ROOT_POOL, random_exponent, random_generator_product, random_transalgebraic
from ene.core import RootDivisor, ene_exp, ene_roots, ene_series, poly_from_divisor, universal_coeff_residual
from ene.euler import check_functional_equation, euler_P, euler_R_rational, euler_R_series, polylog_series
from ene.limits import SampleRegion, collapse_witness, euler_limit_error
from ene.series import SeriesWindow, TruncatedLaurentSeries, series_exp, series_of_rational, series_rescale
from ene.transalg import (
    INF,
    EneSymbol,
    TransalgebraicFunction,
    ene_symbols,
    exponent_series,
    factor_generators,
    transalg_divisor,
    transalg_log_derivative,
    transalg_make,
)

GOLDEN = Path(__file__).parent / "golden"


def G(re, im=0):
    return GaussianRational(re, im)


@pytest.mark.criterion(1, "euler-table 7 matches the golden files byte for byte")
def test_criterion_01_euler_table(criterion):
    for fmt, suffix in (("text", "txt"), ("json", "json")):
        start = time.perf_counter()
        out = io.StringIO()
        assert main(["euler-table", "7", "--format", fmt], out=out) == 0
        elapsed = time.perf_counter() - start
        assert out.getvalue().encode() == (GOLDEN / f"euler_table_7.{suffix}").read_bytes()
        assert elapsed < 1.0
    rows = [euler_P(k).coefficients for k in range(1, 8)]
    assert rows == [[1], [1], [1, 1], [1, 4, 1], [1, 11, 11, 1], [1, 26, 66, 26, 1], [1, 57, 302, 302, 57, 1]]
    criterion(f"{elapsed * 1000:.1f} ms")


@pytest.mark.criterion(2, "P_k invariants and functional equation for k = 2..16")
def test_criterion_02_numerator_invariants(criterion):
    start = time.perf_counter()
    for k in range(2, 17):
        p = euler_P(k)
        c = p.coefficients
        assert p.poly.degree == k - 2
        assert p.poly(0) == 1
        assert p.poly(1) == factorial(k - 1)
        assert c == c[::-1]
        assert check_functional_equation(k)
        r = euler_R_rational(k)
        x = G(Fraction(3, 7), Fraction(-2, 5))
        assert r(1 / x) == (-1) ** k * r(x)
    elapsed = time.perf_counter() - start
    assert elapsed < 2.0
    criterion(f"{elapsed:.3f} s")


@pytest.mark.criterion(3, "closed form of R_k expands to -sum n^(k-1) z^n through order 24, k = 1..8")
def test_criterion_03_closed_form(criterion):
    w = SeriesWindow(0, 24)
    for k in range(1, 9):
        s = series_of_rational(euler_R_rational(k), w)
        assert [s[n] for n in range(25)] == [0] + [-(n ** (k - 1)) for n in range(1, 25)]


@pytest.mark.criterion(4, "series eñe product equals the root-divisor product on 200 random pairs, order 12")
def test_criterion_04_bridge(criterion):
    rng = random.Random(2024)
    start = time.perf_counter()
    for _ in range(200):
        a = RootDivisor([(rng.choice(ROOT_POOL), 1) for _ in range(rng.randint(1, 4))])
        b = RootDivisor([(rng.choice(ROOT_POOL), 1) for _ in range(rng.randint(1, 4))])
        lhs = ene_series(poly_from_divisor(a, 12), poly_from_divisor(b, 12))
        assert lhs == poly_from_divisor(ene_roots(a, b), 12)
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    criterion(f"{elapsed:.2f} s")


WEIGHTS = [(G(1), G(1)), (G(2), G(Fraction(-1, 3))), (G(1, 1), G(Fraction(1, 2), -2))]


@pytest.mark.criterion(5, "generator law for k, l in -3..4 without 0 and u, v in the parameter pool, order 20")
def test_criterion_05_generator_law(criterion):
    w = SeriesWindow(0, 20)
    orders = [k for k in range(-3, 5) if k != 0]
    checked = 0
    for k in orders:
        for l in orders:
            for u in PARAM_POOL:
                for v in PARAM_POOL:
                    for a, b in WEIGHTS:
                        F = series_rescale(euler_R_series(k, w), u).scale(a)
                        H = series_rescale(euler_R_series(l, w), v).scale(b)
                        expected = series_rescale(euler_R_series(k + l, w), u * v).scale(a * b)
                        assert ene_exp(F, H) == expected
                        assert ene_symbols(EneSymbol(k, u, a), EneSymbol(l, v, b)).exponent_series(w) == expected
                        if k + l == 0 and a * b == ONE:
                            assert series_exp(expected) == TruncatedLaurentSeries([ONE, -(u * v).inverse()], 0, 20)
                        checked += 1
    criterion(f"{checked} cases")


@pytest.mark.criterion(6, "e^(R_k) eñe e^(-Li_(k+1)) = 1 - z through order 24, k = 0..6")
def test_criterion_06_ene_pole_inverse(criterion):
    w = SeriesWindow(0, 24)
    one_minus_z = TruncatedLaurentSeries([ONE, -ONE], 0, 24)
    for k in range(0, 7):
        Rk = euler_R_series(k, w) if k == 0 else series_of_rational(euler_R_rational(k), w)
        out = ene_exp(Rk, -polylog_series(k + 1, w))
        assert series_exp(out) == one_minus_z
        # series route: exponentiate both factors first
        assert ene_series(series_exp(Rk), series_exp(-polylog_series(k + 1, w))) == one_minus_z


@pytest.mark.criterion(7, "ring axioms on 100 random generator products, window 12")
def test_criterion_07_ring_axioms(criterion):
    w = SeriesWindow(0, 12)
    rng = random.Random(7)
    unit = exponent_series(TransalgebraicFunction(Poly([1, -1])), w)
    one = exponent_series(TransalgebraicFunction(ONE), w)
    start = time.perf_counter()
    for _ in range(100):
        f, g, h = (random_generator_product(rng, w) for _ in range(3))
        assert f.ene(g).agrees_with(g.ene(f))
        assert f.ene(g).ene(h).agrees_with(f.ene(g.ene(h)))
        assert f.ene(g * h).agrees_with(f.ene(g) * f.ene(h))
        assert f.ene(unit).agrees_with(f)
        assert f.ene(one).agrees_with(one)
        # same laws on the exponentiated series
        assert f.ene(g).series == ene_series(f.series, g.series)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    criterion(f"{elapsed:.2f} s")


@pytest.mark.criterion(8, "c_n + n a_n b_n independent of a_n, b_n with lower coefficients fixed, n <= 10")
def test_criterion_08_universal_coefficients(criterion):
    rng = random.Random(8)
    tops = [(G(1), G(2)), (G(-3), G(Fraction(1, 2))), (G(Fraction(2, 7)), G(0, 1))]
    for n in range(1, 11):
        lower_a = [G(rng.randint(-4, 4) or 1) for _ in range(n - 1)]
        lower_b = [G(rng.randint(-4, 4) or 1) for _ in range(n - 1)]
        values = {universal_coeff_residual(lower_a + [x], lower_b + [y], n) for x, y in tops}
        if len(values) != 1:
            criterion(f"n={n}: residual takes {len(values)} values as (a_n, b_n) varies")
        assert len(values) == 1


@pytest.mark.criterion(9, "generator factorization reassembles 100 random exponents up to a constant")
def test_criterion_09_factorization(criterion):
    rng = random.Random(9)
    for _ in range(100):
        exp = random_exponent(rng)
        fac = factor_generators(exp)
        rest = exp - (fac.exponent() - fac.constant)
        assert rest.is_constant()
        assert (exp - fac.exponent()).is_zero()


@pytest.mark.criterion(10, "dlog residues equal multiplicities and pole orders equal d + 1 on 100 random functions")
def test_criterion_10_log_derivative(criterion):
    rng = random.Random(10)
    for _ in range(100):
        f = random_transalgebraic(rng)
        div = transalg_divisor(f)
        dlog = transalg_log_derivative(f)
        for p in div.support():
            if p is not INF:
                r = residue(dlog, p)
                assert r.is_real() and r.re.denominator == 1
                assert r == div.algebraic.get(p, 0)
        for p, d in div.transcendental.items():
            if p is INF:
                assert dlog.num.degree - dlog.den.degree + 2 == d + 1
            else:
                assert polar_order(dlog, p) == d + 1


@pytest.mark.criterion(11, "Euler limit error halves as k doubles, k = 64..512")
def test_criterion_11_decay(criterion):
    z = RationalFunction.z()
    region = SampleRegion(((0, 0.4, 64), (0, 3.0, 64)))
    start = time.perf_counter()
    seen = []
    for f in (transalg_make(1, z), transalg_make(1 - z / 2, 1 / (1 - z))):
        errs = [euler_limit_error(f, k, region) for k in (64, 128, 256, 512)]
        ratios = [b / a for a, b in zip(errs, errs[1:])]
        seen.extend(ratios)
        assert all(0.35 <= r <= 0.65 for r in ratios)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    criterion("ratios " + ", ".join(f"{r:.3f}" for r in seen))


@pytest.mark.criterion(12, "collapse witness for e^(1/(1-z)) at k = 100")
def test_criterion_12_collapse(criterion):
    z = RationalFunction.z()
    f = transalg_make(1, 1 / (1 - z))
    report = collapse_witness(f, 100)
    (cluster,) = report.clusters
    assert cluster.point == 1
    assert len(cluster.zeros) == 1
    (zero, mult), = cluster.zeros
    assert mult == 100 and abs(zero - 1) < 0.02
    assert cluster.poles == ((1 + 0j, 100),)
    assert cluster.distinct_locations >= 2
    criterion(f"zero at {zero.real:.6f}, {cluster.distinct_locations} locations")
