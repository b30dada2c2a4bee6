"""Reduced rational functions, Laurent expansions at points, partial fractions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import Poly, render_poly
from .roots import gaussian_roots
from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = [
    "PolarDecomposition",
    "RationalFunction",
    "laurent_at",
    "partial_fractions",
    "polar_order",
    "rational_reduce",
    "residue",
]


class RationalFunction:
    """``num/den`` with ``gcd(num, den) = 1`` and ``den`` monic.

    The canonical form makes ``==`` structural equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Poly([ONE]) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero():
            self.num, self.den = Poly(), Poly([ONE])
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.leading()
        if lc != ONE:
            inv = lc.inverse()
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def _from_reduced(cls, num: Poly, den: Poly) -> RationalFunction:
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @classmethod
    def z(cls) -> RationalFunction:
        return cls(Poly([ZERO, ONE]))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def __bool__(self):
        return not self.is_zero()

    # arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._from_reduced(-self.num, self.den)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction._from_reduced(self.num**n, self.den**n)

    def scale(self, c) -> RationalFunction:
        c = as_scalar(c)
        if c.is_zero():
            return RationalFunction(Poly())
        return RationalFunction._from_reduced(self.num.scale(c), self.den)

    # calculus / substitution ----------------------------------------------------

    def derivative(self) -> RationalFunction:
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den
        )

    def rescale(self, u) -> RationalFunction:
        """``R(z/u)``."""
        return RationalFunction(self.num.rescale(u), self.den.rescale(u))

    def invert_argument(self) -> RationalFunction:
        """``R(1/z)``."""
        n = max(self.num.degree, self.den.degree, 0)
        return RationalFunction(self.num.reverse(n) if self.num else Poly(), self.den.reverse(n))

    def __call__(self, x) -> GaussianRational:
        x = as_scalar(x)
        d = self.den(x)
        if d.is_zero():
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def evaluate_complex(self, x: complex) -> complex:
        return self.num.evaluate_complex(x) / self.den.evaluate_complex(x)

    def polynomial_part(self) -> Poly:
        return self.num.divmod(self.den)[0]

    def degree_at_infinity(self) -> int:
        """``deg num - deg den``: pole order at infinity when positive."""
        if self.is_zero():
            raise ValueError("zero has no order at infinity")
        return self.num.degree - self.den.degree

    # equality / text --------------------------------------------------------------

    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        return render_rational(self)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (list, tuple)):
        return Poly(x)
    return Poly([x])


def _coerce(x) -> RationalFunction | None:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Poly):
        return RationalFunction._from_reduced(x, Poly([ONE]))
    try:
        return RationalFunction._from_reduced(Poly([as_scalar(x)]), Poly([ONE]))
    except (TypeError, ValueError):
        return None


def _wrap(text: str) -> str:
    if any(op in text for op in " +-*") and not text.lstrip("-").isalnum():
        return f"({text})"
    return text


def render_rational(r: RationalFunction, var: str = "z") -> str:
    num = render_poly(r.num, var)
    if r.den.degree == 0:
        return num
    return f"{_wrap(num)}/{_wrap(render_poly(r.den, var))}"


def rational_reduce(num: Poly, den: Poly) -> RationalFunction:
    """Reduced, monic-denominator representative of ``num/den``."""
    return RationalFunction(num, den)


# local expansions --------------------------------------------------------------


def _series_quotient(n: Poly, d: Poly, count: int) -> list[GaussianRational]:
    """First ``count`` Taylor coefficients of ``n/d`` at 0 (requires ``d(0) != 0``)."""
    d0_inv = d[0].inverse()
    out: list[GaussianRational] = []
    for k in range(count):
        acc = n[k]
        for j in range(1, min(k, d.degree) + 1):
            acc = acc - d.coeffs[j] * out[k - j]
        out.append(acc * d0_inv)
    return out


def laurent_at(r: RationalFunction, point, upto: int = 0) -> dict[int, GaussianRational]:
    """Laurent coefficients of ``r`` in powers of ``(z - point)``.

    Returns indices from minus the pole order up to ``upto`` inclusive.
    """
    point = as_scalar(point)
    n = r.num.shift(point)
    d = r.den.shift(point)
    m = d.valuation()
    d = Poly(d.coeffs[m:])
    coeffs = _series_quotient(n, d, upto + m + 1)
    return {k - m: c for k, c in enumerate(coeffs)}


def polar_order(r: RationalFunction, z0) -> int:
    """Pole order of ``r`` at ``z0`` (0 when ``z0`` is not a pole)."""
    return r.den.shift(as_scalar(z0)).valuation()


def residue(r: RationalFunction, z0) -> GaussianRational:
    """Coefficient of ``(z - z0)^-1`` in the expansion of ``r`` at ``z0``."""
    if polar_order(r, z0) == 0:
        return ZERO
    return laurent_at(r, z0, upto=-1)[-1]


@dataclass(frozen=True)
class PolarDecomposition:
    """``polynomial_part + sum c_j / (z - pole)^j`` over the listed poles."""

    polynomial_part: Poly
    polar_parts: dict = field(default_factory=dict)

    def reassemble(self) -> RationalFunction:
        total = RationalFunction(self.polynomial_part)
        for pole, cs in self.polar_parts.items():
            base = Poly([-pole, ONE])
            m = len(cs)
            num = Poly()
            # sum_j c_j (z - pole)^(m - j) over (z - pole)^m
            for j, c in enumerate(cs, start=1):
                num = num + (base ** (m - j)).scale(c)
            total = total + RationalFunction(num, base**m)
        return total


def partial_fractions(r: RationalFunction) -> PolarDecomposition:
    """Exact partial-fraction decomposition.

    The denominator must split over Q(i); otherwise
    :class:`~ene.algebra.roots.PoleOutsideFieldError` is raised.
    """
    poly_part = r.polynomial_part()
    parts = {}
    if r.den.degree > 0:
        for pole, m in gaussian_roots(r.den).items():
            loc = laurent_at(r, pole, upto=-1)
            parts[pole] = tuple(loc[-j] for j in range(1, m + 1))
    return PolarDecomposition(poly_part, parts)
