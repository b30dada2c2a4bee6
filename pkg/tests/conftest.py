from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ene.algebra import ONE, GaussianRational, Poly, RationalFunction
from ene.cli.verify import PARAM_POOL, ROOT_POOL
from ene.core import RootDivisor
from ene.series import SeriesWindow, TruncatedLaurentSeries

settings.register_profile(
    "ene",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ene")

small_fractions = st.builds(
    Fraction, st.integers(-20, 20), st.integers(1, 12)
)


@st.composite
def gaussians(draw, nonzero=False):
    c = GaussianRational(draw(small_fractions), draw(small_fractions))
    if nonzero and c.is_zero():
        return ONE
    return c


def polys(max_degree=4):
    return st.lists(gaussians(), min_size=0, max_size=max_degree + 1).map(Poly)


pool_roots = st.sampled_from(ROOT_POOL)
pool_params = st.sampled_from(PARAM_POOL)


@st.composite
def root_divisors(draw, max_terms=4, allow_negative=False):
    mults = st.integers(-2, 2).filter(bool) if allow_negative else st.integers(1, 2)
    pairs = draw(st.lists(st.tuples(pool_roots, mults), min_size=1, max_size=max_terms))
    return RootDivisor(pairs)


@st.composite
def pool_rationals(draw, max_factors=4):
    """Product of (z - p)^n over pool points, times a random constant."""
    z = RationalFunction.z()
    r = RationalFunction(draw(gaussians(nonzero=True)))
    for p, n in draw(st.lists(st.tuples(pool_roots, st.integers(-3, 3)), max_size=max_factors)):
        r = r * (z - p) ** n
    return r


@st.composite
def normalized_series(draw, order=10):
    coeffs = [ONE] + [draw(gaussians()) for _ in range(order)]
    return TruncatedLaurentSeries(coeffs, 0, order)


@st.composite
def nilpotent_series(draw, order=10):
    coeffs = [GaussianRational(0)] + [draw(gaussians()) for _ in range(order)]
    return TruncatedLaurentSeries(coeffs, 0, order)


@pytest.fixture
def z():
    return RationalFunction.z()


@pytest.fixture
def window12():
    return SeriesWindow(0, 12)


_ACCEPTANCE: dict = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the verdict is whatever the test body reaches."""
    number = request.node.get_closest_marker("criterion").args[0]
    entry = {"title": request.node.get_closest_marker("criterion").args[1], "detail": "", "ok": False}
    _ACCEPTANCE[number] = entry

    def note(detail):
        entry["detail"] = detail

    yield note
    rep = getattr(request.node, "rep_call", None)
    entry["ok"] = bool(rep and rep.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[number]
        status = "PASS" if e["ok"] else "FAIL"
        line = f"criterion {number:>2} {status}: {e['title']}"
        if e["detail"]:
            line += f" ({e['detail']})"
        terminalreporter.write_line(line)
