"""Transalgebraic functions ``f = R0 * exp(R1)`` on the Riemann sphere.

Covers divisors and degrees, logarithmic derivatives, factorization into
Euler generators ``exp(α R_k(z/z0))``, closed-form eñe products of
generator symbols, and the eñe product of general representatives through
their Laurent exponents at 0.

Everything is handled modulo nonzero constants: exponents carry no constant
term and normalized series start with 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra import (
    ONE,
    ZERO,
    GaussianRational,
    Poly,
    RationalFunction,
    as_scalar,
    gaussian_roots,
    laurent_at,
    partial_fractions,
    polar_order,
)
from .core import NormalizedSeries, RootDivisor, ene_exp
from .euler import euler_R_rational
from .series import (
    DEFAULT_ORDER,
    SeriesWindow,
    TruncatedLaurentSeries,
    series_exp,
    series_log,
    series_of_rational,
)

__all__ = [
    "INF",
    "DegreeProfile",
    "EneSymbol",
    "GeneratorFactorization",
    "NormalizedExponential",
    "TransalgebraicDivisor",
    "TransalgebraicFunction",
    "UnsupportedRepresentativeError",
    "degree_profile",
    "ene_symbol_products",
    "ene_symbol_rational",
    "ene_symbols",
    "ene_transalg",
    "exponent_series",
    "euler_leading_coefficient",
    "factor_generators",
    "merge_symbols",
    "transalg_divisor",
    "transalg_inv",
    "transalg_log_derivative",
    "transalg_make",
    "transalg_mul",
    "transalg_order",
]


class _PointAtInfinity:
    """The point ``∞`` of the sphere; a singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return (_PointAtInfinity, ())


INF = _PointAtInfinity()


def _point_key(p):
    if p is INF:
        return (1, 0, 0)
    return (0, *p.sort_key())


class UnsupportedRepresentativeError(ValueError):
    pass


# functions ---------------------------------------------------------------------


def _zero_constant(r: RationalFunction) -> RationalFunction:
    c = r.polynomial_part()[0]
    return r - c if not c.is_zero() else r


class TransalgebraicFunction:
    """``rat * exp(exp)`` with the exponent's partial-fraction constant set to 0.

    ``exp`` is the exponent rational function, not Euler's ``R_1``.
    """

    __slots__ = ("rat", "exp")

    def __init__(self, rat, exp=None):
        rat = rat if isinstance(rat, RationalFunction) else RationalFunction(rat)
        if rat.is_zero():
            raise ValueError("rational part must be nonzero")
        exp = RationalFunction(Poly()) if exp is None else exp
        exp = exp if isinstance(exp, RationalFunction) else RationalFunction(exp)
        self.rat = rat
        self.exp = _zero_constant(exp)

    def is_rational(self) -> bool:
        return self.exp.is_zero()

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            other = TransalgebraicFunction(other)
        if not isinstance(other, TransalgebraicFunction):
            return NotImplemented
        return TransalgebraicFunction(self.rat * other.rat, self.exp + other.exp)

    __rmul__ = __mul__

    def inverse(self) -> TransalgebraicFunction:
        return TransalgebraicFunction(1 / self.rat, -self.exp)

    def __truediv__(self, other):
        if isinstance(other, RationalFunction):
            other = TransalgebraicFunction(other)
        if not isinstance(other, TransalgebraicFunction):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return TransalgebraicFunction(self.rat**n, self.exp.scale(n))

    def equals_mod_constants(self, other: TransalgebraicFunction) -> bool:
        q = self.rat / other.rat
        return q.is_constant() and self.exp == other.exp

    def __eq__(self, other):
        if not isinstance(other, TransalgebraicFunction):
            return NotImplemented
        return self.rat == other.rat and self.exp == other.exp

    def __hash__(self):
        return hash((self.rat, self.exp))

    def __repr__(self):
        return f"TransalgebraicFunction({self.rat}, {self.exp})"

    def __str__(self):
        if self.exp.is_zero():
            return str(self.rat)
        head = "" if self.rat == RationalFunction(ONE) else f"({self.rat})*"
        return f"{head}exp({self.exp})"


def transalg_make(rat, exp=None) -> TransalgebraicFunction:
    return TransalgebraicFunction(rat, exp)


def transalg_mul(f: TransalgebraicFunction, g: TransalgebraicFunction) -> TransalgebraicFunction:
    return f * g


def transalg_inv(f: TransalgebraicFunction) -> TransalgebraicFunction:
    return f.inverse()


# divisors ----------------------------------------------------------------------


@dataclass(frozen=True)
class TransalgebraicDivisor:
    """Algebraic part ``{point: n}`` plus transcendental part ``{point: d >= 1}``."""

    algebraic: dict = field(default_factory=dict)
    transcendental: dict = field(default_factory=dict)

    def __post_init__(self):
        alg = {p: n for p, n in self.algebraic.items() if n != 0}
        for p, d in self.transcendental.items():
            if not isinstance(d, int) or d < 1:
                raise ValueError(f"transcendental order at {p} must be a finite integer >= 1")
        object.__setattr__(self, "algebraic", dict(sorted(alg.items(), key=lambda kv: _point_key(kv[0]))))
        object.__setattr__(
            self, "transcendental", dict(sorted(self.transcendental.items(), key=lambda kv: _point_key(kv[0])))
        )

    @property
    def singular_set(self) -> set:
        return set(self.transcendental)

    def support(self) -> set:
        return set(self.algebraic) | set(self.transcendental)

    def degree(self) -> int:
        return sum(self.algebraic.values())

    def __neg__(self):
        return TransalgebraicDivisor({p: -n for p, n in self.algebraic.items()}, dict(self.transcendental))


@dataclass(frozen=True)
class DegreeProfile:
    d0: int
    d_infinity: int


def _algebraic_divisor(r: RationalFunction) -> dict:
    div: dict = {}
    if r.num.degree > 0:
        div.update(gaussian_roots(r.num))
    if r.den.degree > 0:
        for root, m in gaussian_roots(r.den).items():
            div[root] = div.get(root, 0) - m
    at_inf = r.den.degree - r.num.degree
    if at_inf:
        div[INF] = at_inf
    return div


def transalg_divisor(f: TransalgebraicFunction) -> TransalgebraicDivisor:
    trans: dict = {}
    if not f.exp.is_zero():
        if f.exp.den.degree > 0:
            trans.update(gaussian_roots(f.exp.den))
        d_inf = f.exp.degree_at_infinity()
        if d_inf > 0:
            trans[INF] = d_inf
    return TransalgebraicDivisor(_algebraic_divisor(f.rat), trans)


def transalg_order(f: TransalgebraicFunction, z0) -> int:
    """Order of the exponential singularity at ``z0`` (0 if there is none)."""
    if f.exp.is_zero():
        return 0
    if z0 is INF:
        return max(f.exp.degree_at_infinity(), 0)
    return polar_order(f.exp, z0)


def degree_profile(f: TransalgebraicFunction) -> DegreeProfile:
    div = transalg_divisor(f)
    s = div.singular_set
    return DegreeProfile(
        d0=len(set(div.algebraic) - s),
        d_infinity=sum(d + 1 for d in div.transcendental.values()),
    )


def transalg_log_derivative(f: TransalgebraicFunction) -> RationalFunction:
    """``f'/f = rat'/rat + exp'``."""
    return f.rat.derivative() / f.rat + f.exp.derivative()


# generator factorization ------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorFactorization:
    """``rat * exp(c + P(z) + Q(1/z) + sum α R_k(z/z0))``.

    ``poly_at_zero`` holds ``Q`` with coefficient ``j`` multiplying ``z^-j``.
    ``polar_terms`` lists ``(k, z0, α)``; ``constant`` is ``c``, which only
    changes ``f`` by a constant factor.
    """

    rat: RationalFunction
    poly_at_infinity: Poly
    poly_at_zero: Poly
    polar_terms: tuple = ()
    constant: GaussianRational = ZERO

    def exponent(self) -> RationalFunction:
        total = RationalFunction(self.poly_at_infinity) + self.constant
        if not self.poly_at_zero.is_zero():
            n = self.poly_at_zero.degree
            total = total + RationalFunction(self.poly_at_zero.reverse(n), Poly.monomial(n))
        for k, z0, alpha in self.polar_terms:
            total = total + euler_R_rational(k).rescale(z0).scale(alpha)
        return total

    def reassemble(self) -> TransalgebraicFunction:
        return TransalgebraicFunction(self.rat, self.exponent())


def _euler_polar_part(k: int, z0: GaussianRational) -> dict:
    return laurent_at(euler_R_rational(k).rescale(z0), z0, upto=-1)


def factor_generators(f) -> GeneratorFactorization:
    """Split the exponent into ``e^{P(z)}``, ``e^{P(1/z)}`` and Euler generators.

    Polar parts are matched from the top order down; ``R_k(z/z0)`` has a pole
    of order exactly ``k`` at ``z0`` with leading coefficient
    ``-(k-1)! (-z0)^k``, so each step is a single exact division.
    """
    if isinstance(f, RationalFunction):
        rat, exp = RationalFunction(ONE), f
    else:
        rat, exp = f.rat, f.exp
    poly_inf = exp.polynomial_part()
    poly_inf = Poly([ZERO] + list(poly_inf.coeffs[1:])) if poly_inf.degree >= 1 else Poly()
    decomposition = partial_fractions(exp)
    poly_zero = Poly()
    terms = []
    for pole, cs in decomposition.polar_parts.items():
        if pole.is_zero():
            poly_zero = Poly([ZERO] + list(cs))
            continue
        remaining = list(cs)
        for k in range(len(cs), 0, -1):
            c = remaining[k - 1]
            if c.is_zero():
                continue
            part = _euler_polar_part(k, pole)
            alpha = c / part[-k]
            for j in range(1, k + 1):
                remaining[j - 1] = remaining[j - 1] - alpha * part.get(-j, ZERO)
            terms.append((k, pole, alpha))
    terms.sort(key=lambda t: (t[1].sort_key(), -t[0]))
    fac = GeneratorFactorization(rat, poly_inf, poly_zero, tuple(terms))
    rest = exp - fac.exponent()
    assert rest.is_constant(), "generator matching left a nonconstant remainder"
    return GeneratorFactorization(rat, poly_inf, poly_zero, tuple(terms), rest.num[0])


def euler_leading_coefficient(k: int, z0) -> GaussianRational:
    """Coefficient of ``(z - z0)^-k`` in ``R_k(z/z0)``."""
    z0 = as_scalar(z0)
    return -(factorial(k - 1) * (-z0) ** k)


# eñe symbols ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EneSymbol:
    """``exp(weight * R_order(z/param))`` for any integer order.

    Order ``m >= 1`` is an infinite-order zero with its singularity at
    ``param``; ``m <= -1`` is an eñe pole, ``exp(-weight Li_{1-m}(z/param))``,
    branching at ``param``; ``m = 0`` is the plain factor
    ``(1 - z/param)^weight``.  The exponent coefficients are
    ``-weight * n^(m-1) * param^-n``.
    """

    order: int
    param: GaussianRational
    weight: GaussianRational = ONE

    def __post_init__(self):
        object.__setattr__(self, "param", as_scalar(self.param))
        object.__setattr__(self, "weight", as_scalar(self.weight))
        if self.param.is_zero():
            raise ValueError("symbol parameter must be nonzero")

    @classmethod
    def from_naming(cls, m: int, z0, weight=ONE) -> EneSymbol:
        """The symbol written ``(1 - z/z0)^(m·∞)``: parameter ``z0^m``."""
        z0 = as_scalar(z0)
        return cls(m, z0 if m == 0 else z0**m, weight)

    @property
    def kind(self) -> str:
        if self.order > 0:
            return "infinite-zero"
        if self.order < 0:
            return "infinite-pole"
        return "simple-factor"

    def exponent_series(self, window: SeriesWindow | None = None) -> TruncatedLaurentSeries:
        if window is None:
            window = SeriesWindow()
        inv = self.param.inverse()
        m, w = self.order, self.weight

        def coeff(n):
            if n < 1:
                return ZERO
            return -(w * inv**n) * _int_power(n, m - 1)

        return TruncatedLaurentSeries.from_function(coeff, window)

    def as_transalgebraic(self) -> TransalgebraicFunction | None:
        """Closed form when one exists (positive order, or an integer-weight factor)."""
        if self.order >= 1:
            return TransalgebraicFunction(ONE, euler_R_rational(self.order).rescale(self.param).scale(self.weight))
        if self.order == 0 and self.weight.is_real() and self.weight.re.denominator == 1:
            base = RationalFunction(Poly([ONE, -self.param.inverse()]))
            return TransalgebraicFunction(base ** int(self.weight.re))
        return None

    def __str__(self):
        # reads back through the expression parser
        w = self.weight
        if w == ONE:
            head = ""
        elif w == -ONE:
            head = "-"
        else:
            head = f"{scalar_expression(w)}*"
        return f"exp({head}R({self.order}, {scalar_expression(self.param)}))"


def scalar_expression(c: GaussianRational) -> str:
    """``c`` as an expression-language term: ``-3/4`` or ``(1/2 - 3/4*i)``."""
    if c.is_real():
        return str(c.re)
    re_part, im_part = c.re, c.im
    mag = abs(im_part)
    imag = "i" if mag == 1 else f"{mag}*i"
    if re_part == 0:
        return f"({'-' if im_part < 0 else ''}{imag})"
    return f"({re_part} {'-' if im_part < 0 else '+'} {imag})"


def _int_power(n: int, e: int) -> GaussianRational:
    return GaussianRational(Fraction(n) ** e)


def ene_symbols(a: EneSymbol, b: EneSymbol) -> EneSymbol:
    """Closed-form eñe product of two symbols.

    Orders add, parameters multiply, weights multiply; a zero total order is
    the plain factor ``(1 - z/(u v))^(ab)``.
    """
    return EneSymbol(a.order + b.order, a.param * b.param, a.weight * b.weight)


def merge_symbols(symbols) -> list[EneSymbol]:
    acc: dict = {}
    for s in symbols:
        key = (s.order, s.param)
        acc[key] = acc.get(key, ZERO) + s.weight
    out = [EneSymbol(m, u, w) for (m, u), w in acc.items() if not w.is_zero()]
    out.sort(key=lambda s: (s.order, s.param.sort_key()))
    return out


def ene_symbol_products(a, b) -> list[EneSymbol]:
    """Eñe product of two products of symbols, by bilinearity."""
    return merge_symbols(ene_symbols(x, y) for x in a for y in b)


def ene_symbol_rational(sym: EneSymbol, r: RationalFunction) -> list[EneSymbol]:
    """``sym ⋆ r`` distributed over the root divisor of ``r``.

    ``r`` must be finite and nonzero at 0 with roots and poles in Q(i).
    """
    try:
        div = RootDivisor.from_rational(r)
    except ValueError as exc:
        raise UnsupportedRepresentativeError(str(exc)) from exc
    return merge_symbols(ene_symbols(sym, EneSymbol(0, alpha, n)) for alpha, n in div.items())


# eñe product on representatives -------------------------------------------------------------


class NormalizedExponential:
    """An element of T modulo constants, held as its Laurent exponent at 0.

    ``exponent`` has zero constant term.  The regular part exponentiates to a
    normalized power series; a principal part (exponential singularity at 0)
    stays symbolic.
    """

    __slots__ = ("exponent",)

    def __init__(self, exponent: TruncatedLaurentSeries):
        if exponent.low <= 0 <= exponent.high and not exponent[0].is_zero():
            exponent = exponent - exponent[0]
        self.exponent = exponent

    @property
    def order(self) -> int:
        return self.exponent.high

    @property
    def series(self) -> NormalizedSeries:
        return NormalizedSeries.of(series_exp(self.exponent.regular_part()))

    @property
    def principal(self) -> TruncatedLaurentSeries:
        return self.exponent.principal_part()

    def has_principal_part(self) -> bool:
        return self.exponent.has_principal_part()

    def __mul__(self, other):
        if not isinstance(other, NormalizedExponential):
            return NotImplemented
        return NormalizedExponential(_aligned_sum(self.exponent, other.exponent))

    def inverse(self) -> NormalizedExponential:
        return NormalizedExponential(-self.exponent)

    def __truediv__(self, other):
        if not isinstance(other, NormalizedExponential):
            return NotImplemented
        return self * other.inverse()

    def ene(self, other: NormalizedExponential) -> NormalizedExponential:
        low = min(self.exponent.low, other.exponent.low)
        return NormalizedExponential(ene_exp(self.exponent.extend_low(low), other.exponent.extend_low(low)))

    def agrees_with(self, other: NormalizedExponential, upto: int | None = None) -> bool:
        return self.exponent.agrees_with(other.exponent, upto)

    def __repr__(self):
        return f"NormalizedExponential({self.exponent})"

    def __str__(self):
        body = str(self.series)
        if self.has_principal_part():
            body = f"({body})*exp({self.principal})"
        return body


def _aligned_sum(a: TruncatedLaurentSeries, b: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    low = min(a.low, b.low)
    return a.extend_low(low) + b.extend_low(low)


def exponent_series(f, window: SeriesWindow | None = None) -> NormalizedExponential:
    """Laurent exponent at 0 of ``f`` normalized to value 1 at 0.

    Accepts transalgebraic functions, rational functions, symbols, plain
    normalized series and already-normalized exponentials.
    """
    if window is None:
        window = SeriesWindow()
    if isinstance(f, NormalizedExponential):
        return f
    if isinstance(f, EneSymbol):
        return NormalizedExponential(f.exponent_series(window))
    if isinstance(f, TruncatedLaurentSeries):
        if f.has_principal_part() or f[0].is_zero():
            raise UnsupportedRepresentativeError("unsupported representative: algebraic divisor meets 0")
        return NormalizedExponential(series_log(f.scale(f[0].inverse())))
    if isinstance(f, RationalFunction):
        f = TransalgebraicFunction(f)
    rat = f.rat
    if rat.num[0].is_zero() or rat.den[0].is_zero():
        raise UnsupportedRepresentativeError("unsupported representative: algebraic divisor meets 0")
    base = series_of_rational(rat, SeriesWindow(0, window.high))
    log_rat = series_log(base.scale(base[0].inverse()))
    exp_part = series_of_rational(f.exp, window)
    return NormalizedExponential(_aligned_sum(log_rat, exp_part))


def ene_transalg(f, g, window: SeriesWindow | None = None) -> NormalizedExponential:
    """Eñe product of two representatives, modulo constants.

    Both operands are normalized to the value 1 at 0; their Laurent
    exponents are combined with ``⋆_e``.  ``result.series`` is the
    normalized power series, ``result.principal`` the principal-part
    exponent (nonzero only when both operands are singular at 0).
    """
    if window is None:
        window = SeriesWindow(0, DEFAULT_ORDER)
    return exponent_series(f, window).ene(exponent_series(g, window))
