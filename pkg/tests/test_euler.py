from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ene.algebra import ONE, Poly, RationalFunction
from ene.core import ene_exp
from ene.euler import (
    check_functional_equation,
    euler_P,
    euler_R_rational,
    euler_R_series,
    euler_table,
    polylog_series,
    render_euler_R,
)
from ene.series import SeriesWindow, series_of_rational, series_z_derivative

# numerator lists as printed in Euler's table
TABLE = {
    1: [1],
    2: [1],
    3: [1, 1],
    4: [1, 4, 1],
    5: [1, 11, 11, 1],
    6: [1, 26, 66, 26, 1],
    7: [1, 57, 302, 302, 57, 1],
}


def eulerian(n, m):
    """Closed-form Eulerian number, used as an oracle independent of the recurrence."""
    return sum((-1) ** j * comb(n + 1, j) * (m + 1 - j) ** n for j in range(m + 1))


@pytest.mark.parametrize("k", sorted(TABLE))
def test_table_numerators(k):
    assert euler_P(k).coefficients == TABLE[k]


def test_table_rows_and_render():
    rows = euler_table(3)
    assert rows[2] == {"k": 3, "P": [1, 1], "R": "-z(1+z)/(1-z)^3"}
    assert render_euler_R(1) == "-z/(1-z)"
    assert render_euler_R(4) == "-z(1+4z+z^2)/(1-z)^4"


@pytest.mark.parametrize("k", range(2, 17))
def test_numerator_invariants(k):
    p = euler_P(k)
    c = p.coefficients
    assert p.poly.degree == k - 2
    assert c[0] == 1
    assert sum(c) == factorial(k - 1)
    assert c == c[::-1]
    assert c == [eulerian(k - 1, m) for m in range(k - 1)]
    assert check_functional_equation(k)


@pytest.mark.parametrize("k", range(2, 17))
def test_functional_equation_pointwise(k):
    r = euler_R_rational(k)
    for x in (Fraction(2, 7), Fraction(-5, 3), Fraction(11, 4)):
        assert r(1 / x) == (-1) ** k * r(x)


@pytest.mark.parametrize("k", range(3, 10))
def test_functional_equation_negative_control(k):
    p = euler_P(k).poly
    assert not check_functional_equation(k, p + Poly([1]))
    assert not check_functional_equation(k, p + Poly([0] * (k - 2) + [3]))


@pytest.mark.parametrize("k", range(1, 9))
def test_closed_form_matches_coefficients(k):
    w = SeriesWindow(0, 24)
    s = series_of_rational(euler_R_rational(k), w)
    assert [s[n] for n in range(25)] == [0] + [-(n ** (k - 1)) for n in range(1, 25)]


@pytest.mark.parametrize("k", range(-4, 9))
def test_theta_recurrence(k):
    w = SeriesWindow(0, 16)
    assert series_z_derivative(euler_R_series(k, w)) == euler_R_series(k + 1, w)


def test_theta_recurrence_rational(z):
    for k in range(1, 9):
        r = euler_R_rational(k)
        assert z * r.derivative() == euler_R_rational(k + 1)


def test_polylog_examples():
    w = SeriesWindow(0, 6)
    li1 = polylog_series(1, w)
    assert [li1[n] for n in range(7)] == [0] + [Fraction(1, n) for n in range(1, 7)]
    li2 = polylog_series(2, w)
    assert li2[3] == Fraction(1, 9)
    with pytest.raises(ValueError):
        polylog_series(0, w)


@pytest.mark.parametrize("k", range(0, 8))
def test_polylog_is_negative_R(k):
    w = SeriesWindow(0, 16)
    assert polylog_series(k + 1, w) == -euler_R_series(-k, w)


@given(st.integers(-5, 6), st.integers(-5, 6))
def test_exponents_add_under_ene(k, l):
    w = SeriesWindow(0, 14)
    assert ene_exp(euler_R_series(k, w), euler_R_series(l, w)) == euler_R_series(k + l, w)


def test_R0_is_log_one_minus_z():
    w = SeriesWindow(0, 10)
    r0 = euler_R_series(0, w)
    assert [r0[n] for n in range(11)] == [0] + [Fraction(-1, n) for n in range(1, 11)]
    assert euler_R_series(1, w) == series_of_rational(RationalFunction.z() / (RationalFunction.z() - ONE), w)


def test_domain_errors():
    with pytest.raises(ValueError):
        euler_P(0)
    with pytest.raises(ValueError):
        euler_R_rational(0)
