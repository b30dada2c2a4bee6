"""Identity-checking suites behind ``ene verify``.

Every suite is deterministic: random cases come from a seeded generator and
reports carry no timings.  ``impl`` lets a caller swap any of the core
operations (by name) for a deliberately broken version.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

from ..algebra import I, ONE, GaussianRational, Poly, RationalFunction
from ..core import RootDivisor, ene_exp, ene_roots, ene_series, poly_from_divisor
from ..euler import check_functional_equation, euler_P, euler_R_rational, euler_R_series, polylog_series
from ..limits import SampleRegion, collapse_witness, euler_limit_error, hausdorff_distance
from ..series import SeriesWindow, series_exp, series_of_rational
from ..transalg import (
    EneSymbol,
    NormalizedExponential,
    TransalgebraicFunction,
    ene_symbols,
    exponent_series,
    factor_generators,
)

__all__ = ["MIN_ORDER", "SUITES", "ROOT_POOL", "PARAM_POOL", "run_suite"]

MIN_ORDER = 8
MAX_FAILURES = 5

PARAM_POOL = (
    GaussianRational(1),
    GaussianRational(2),
    GaussianRational(-1),
    GaussianRational(Fraction(1, 2)),
    GaussianRational(1, 1),
)
ROOT_POOL = PARAM_POOL + (
    GaussianRational(3),
    GaussianRational(Fraction(-2, 3)),
    I,
    GaussianRational(1, -2),
    GaussianRational(Fraction(1, 2), Fraction(1, 3)),
)
GENERATOR_ORDERS = tuple(k for k in range(-3, 5) if k != 0)


class _Report:
    def __init__(self, suite: str, params: dict):
        self.suite = suite
        self.params = params
        self.checks = 0
        self.failures: list[dict] = []
        self.failure_count = 0

    def check(self, ok: bool, law: str, **detail):
        self.checks += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append({"law": law, **{k: str(v) for k, v in detail.items()}})

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.failure_count == 0,
            "checks": self.checks,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "params": self.params,
        }


def _op(impl, name, default):
    return (impl or {}).get(name, default)


# random objects ---------------------------------------------------------------------


def random_symbol(rng: random.Random) -> EneSymbol:
    weight = GaussianRational(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3])))
    return EneSymbol(rng.choice(GENERATOR_ORDERS), rng.choice(PARAM_POOL), weight)


def random_generator_product(rng: random.Random, window: SeriesWindow) -> NormalizedExponential:
    """A product of one to three generator symbols, sometimes times a rational factor."""
    total = None
    for _ in range(rng.randint(1, 3)):
        e = random_symbol(rng).exponent_series(window)
        total = e if total is None else total + e
    if rng.random() < 0.5:
        alpha = rng.choice(ROOT_POOL)
        factor = RationalFunction(Poly([ONE, -alpha.inverse()])) ** rng.choice([-2, -1, 1, 2])
        total = total + exponent_series(factor, window).exponent
    return NormalizedExponential(total)


def random_root_divisor(rng: random.Random, max_degree: int = 4) -> RootDivisor:
    degree = rng.randint(1, max_degree)
    return RootDivisor([(rng.choice(ROOT_POOL), 1) for _ in range(degree)])


def random_exponent(rng: random.Random) -> RationalFunction:
    """Random rational exponent: poles of order at most 4 at up to 3 points of the pool."""
    z = RationalFunction.z()
    total = RationalFunction(Poly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]))
    points = rng.sample(list(ROOT_POOL) + [GaussianRational(0)], rng.randint(1, 3))
    for p in points:
        for j in range(1, rng.randint(1, 4) + 1):
            c = GaussianRational(Fraction(rng.randint(-5, 5), rng.randint(1, 4)), rng.choice([0, 0, 1, -1]))
            total = total + RationalFunction(Poly([c])) / (z - p) ** j
    return total


def random_transalgebraic(rng: random.Random) -> TransalgebraicFunction:
    z = RationalFunction.z()
    rat = RationalFunction(ONE)
    for _ in range(rng.randint(0, 3)):
        rat = rat * (z - rng.choice(ROOT_POOL)) ** rng.choice([-2, -1, 1, 2])
    return TransalgebraicFunction(rat, random_exponent(rng))


# suites ---------------------------------------------------------------------------------


def _exp_equal(a: NormalizedExponential, b: NormalizedExponential) -> bool:
    return a.agrees_with(b)


def suite_ring(cfg, impl=None, cases: int = 100, seed: int = 0) -> dict:
    rep = _Report("ring", {"order": cfg.order, "cases": cases, "seed": seed})
    window = SeriesWindow(0, cfg.order)
    star = _op(impl, "ene_exp", ene_exp)

    def ene(f, g):
        return NormalizedExponential(star(f.exponent, g.exponent))

    rng = random.Random(seed)
    unit = exponent_series(RationalFunction(Poly([ONE, -ONE])), window)
    one = NormalizedExponential(exponent_series(RationalFunction(ONE), window).exponent)
    for i in range(cases):
        f, g, h = (random_generator_product(rng, window) for _ in range(3))
        rep.check(_exp_equal(ene(f, g), ene(g, f)), "commutativity", case=i, f=f, g=g)
        rep.check(_exp_equal(ene(ene(f, g), h), ene(f, ene(g, h))), "associativity", case=i, f=f, g=g, h=h)
        rep.check(_exp_equal(ene(f, g * h), ene(f, g) * ene(f, h)), "distributivity", case=i, f=f, g=g, h=h)
        rep.check(_exp_equal(ene(f, unit), f), "unit", case=i, f=f)
        rep.check(_exp_equal(ene(f, one), one), "absorbing", case=i, f=f)
    return rep.as_dict()


def suite_euler(cfg, impl=None, max_k: int = 16) -> dict:
    rep = _Report("euler", {"order": cfg.order, "max_k": max_k})
    for k in range(2, max_k + 1):
        p = euler_P(k).poly
        cs = euler_P(k).coefficients
        rep.check(p.degree == k - 2, "degree", k=k)
        rep.check(p[0] == ONE, "P(0) = 1", k=k)
        rep.check(p(1) == factorial(k - 1), "P(1) = (k-1)!", k=k)
        rep.check(cs == cs[::-1], "palindromy", k=k)
        rep.check(check_functional_equation(k), "functional equation", k=k)
    window = SeriesWindow(0, cfg.order)
    for k in range(1, max_k + 1):
        closed = series_of_rational(_op(impl, "euler_R_rational", euler_R_rational)(k), window)
        rep.check(closed == euler_R_series(k, window), "closed form vs coefficients", k=k)
    return rep.as_dict()


def suite_generators(cfg, impl=None, cases: int = 100, seed: int = 0) -> dict:
    rep = _Report("generators", {"order": cfg.order, "cases": cases, "seed": seed})
    window = SeriesWindow(0, cfg.order)
    star = _op(impl, "ene_exp", ene_exp)
    rng = random.Random(seed)
    weights = [(ONE, ONE), (GaussianRational(Fraction(1, 2)), GaussianRational(-3))]
    for k in GENERATOR_ORDERS:
        for l in GENERATOR_ORDERS:
            for u in PARAM_POOL:
                for v in PARAM_POOL:
                    for a, b in weights:
                        s, t = EneSymbol(k, u, a), EneSymbol(l, v, b)
                        lhs = star(s.exponent_series(window), t.exponent_series(window))
                        prod = ene_symbols(s, t)
                        ok = lhs == prod.exponent_series(window)
                        if k + l == 0:
                            # (1 - z/(uv))^(ab) through its logarithm
                            base = RationalFunction(Poly([ONE, -(u * v).inverse()]))
                            log_base = exponent_series(base, window).exponent.scale(a * b)
                            ok = ok and lhs == log_base
                        rep.check(ok, "generator law", k=k, l=l, u=u, v=v, a=a, b=b)
    for i in range(cases):
        e = random_exponent(rng)
        fac = factor_generators(e)
        rep.check((fac.exponent() - e).is_constant(), "factorization round trip", case=i, exponent=e)
    return rep.as_dict()


def suite_polylog(cfg, impl=None, max_k: int = 6) -> dict:
    rep = _Report("polylog", {"order": cfg.order, "max_k": max_k})
    window = SeriesWindow(0, cfg.order)
    star = _op(impl, "ene_exp", ene_exp)
    one_minus_z = series_of_rational(RationalFunction(Poly([ONE, -ONE])), window)
    for k in range(0, max_k + 1):
        lhs = series_exp(star(euler_R_series(k, window), -polylog_series(k + 1, window)))
        rep.check(lhs == one_minus_z, "eñe pole inverse", k=k)
        rep.check(euler_R_series(-k, window) == -polylog_series(k + 1, window), "R_-k = -Li_(k+1)", k=k)
    return rep.as_dict()


def suite_bridge(cfg, impl=None, cases: int = 200, seed: int = 0) -> dict:
    rep = _Report("bridge", {"order": cfg.order, "cases": cases, "seed": seed})
    roots_op = _op(impl, "ene_roots", ene_roots)
    series_op = _op(impl, "ene_series", ene_series)
    rng = random.Random(seed)
    for i in range(cases):
        a, b = random_root_divisor(rng), random_root_divisor(rng)
        lhs = series_op(poly_from_divisor(a, cfg.order), poly_from_divisor(b, cfg.order))
        rhs = poly_from_divisor(roots_op(a, b), cfg.order)
        rep.check(lhs == rhs, "series vs roots", case=i, a=_divisor_text(a), b=_divisor_text(b))
    return rep.as_dict()


def _divisor_text(d: RootDivisor) -> str:
    return "{" + ", ".join(f"{r}: {m}" for r, m in d.items()) + "}"


def suite_limits(cfg, impl=None) -> dict:
    rep = _Report("limits", {"epsilon": cfg.epsilon})
    z = RationalFunction.z()
    examples = [
        ("exp(z)", TransalgebraicFunction(ONE, z), "circle:0,0,1,64"),
        ("(1-z/2)exp(1/(1-z))", TransalgebraicFunction(1 - z / 2, 1 / (1 - z)), "circle:0,0,0.4,64;circle:0,0,3,64"),
    ]
    ks = [64, 128, 256, 512]
    for name, f, grid in examples:
        region = SampleRegion.parse(grid, cfg.epsilon)
        errors = [euler_limit_error(f, k, region) for k in ks]
        for k, e0, e1 in zip(ks, errors, errors[1:]):
            ratio = e1 / e0
            rep.check(0.35 <= ratio <= 0.65, "decay ratio", f=name, k=k, ratio=f"{ratio:.6f}")
    f = TransalgebraicFunction(ONE, 1 / (1 - z))
    report = collapse_witness(f, 100)
    (cluster,) = report.clusters
    near_zeros = [(p, m) for p, m in cluster.zeros if abs(p - 1) < 0.02]
    rep.check(len(near_zeros) == 1 and near_zeros[0][1] == 100, "zero cluster", zeros=cluster.zeros)
    rep.check(cluster.poles == ((1, 100),), "pole of order k", poles=cluster.poles)
    rep.check(cluster.distinct_locations >= 2, "d+1 collapsing locations", count=cluster.distinct_locations)
    dists = [hausdorff_distance(collapse_witness(f, k).support(), [1]) for k in (25, 50, 100, 200)]
    rep.check(all(b < a for a, b in zip(dists, dists[1:])), "hausdorff monotone", distances=dists)
    return rep.as_dict()


SUITES = {
    "ring": suite_ring,
    "euler": suite_euler,
    "generators": suite_generators,
    "polylog": suite_polylog,
    "bridge": suite_bridge,
    "limits": suite_limits,
}


def run_suite(name: str, cfg, impl=None, **options) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if cfg.order < MIN_ORDER:
        raise ValueError(f"verify needs --order >= {MIN_ORDER}")
    return SUITES[name](cfg, impl, **options)
