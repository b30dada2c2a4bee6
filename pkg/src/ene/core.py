"""The eñe product: exponent form, normalized-series form and root form.

The three agree: for normalized ``f = exp(F)`` and ``g = exp(G)``,
``f ⋆ g = exp(F ⋆_e G)`` with ``(F ⋆_e G)_k = -k F_k G_k``, and on
polynomials ``∏(1 - z/α) ⋆ ∏(1 - z/β) = ∏(1 - z/(αβ))``.
"""

from __future__ import annotations

from collections.abc import Mapping

from .algebra import ONE, GaussianRational, Poly, RationalFunction, as_scalar, gaussian_roots
from .series import (
    DEFAULT_ORDER,
    SeriesError,
    SeriesWindow,
    TruncatedLaurentSeries,
    series_exp,
    series_log,
    series_mul,
)

__all__ = [
    "NormalizedSeries",
    "RootDivisor",
    "ene_exp",
    "ene_roots",
    "ene_series",
    "poly_from_divisor",
    "universal_coeff_residual",
]


class NormalizedSeries(TruncatedLaurentSeries):
    """Power series with constant term exactly 1."""

    __slots__ = ()

    def __init__(self, coeffs, high: int | None = None):
        super().__init__(coeffs, 0, high)
        if self[0] != ONE:
            raise SeriesError("series not normalized")

    @classmethod
    def of(cls, s: TruncatedLaurentSeries) -> NormalizedSeries:
        if s.has_principal_part() or s[0] != ONE:
            raise SeriesError("series not normalized")
        return cls._trusted(list(s.regular_part().coeffs), 0, s.high)


class RootDivisor(Mapping):
    """Finite map ``root -> nonzero multiplicity`` with roots in Q(i)*.

    Represents ``∏ (1 - z/α)^{n_α}``; negative multiplicities give rational
    functions.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        acc: dict[GaussianRational, int] = {}
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        for root, mult in pairs:
            root = as_scalar(root)
            if root.is_zero():
                raise ValueError("0 is never a root location")
            if not isinstance(mult, int):
                raise TypeError("multiplicities must be integers")
            acc[root] = acc.get(root, 0) + mult
        self._entries = {r: m for r, m in sorted(acc.items(), key=lambda kv: kv[0].sort_key()) if m != 0}

    def __getitem__(self, root):
        return self._entries[as_scalar(root)]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, RootDivisor):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self == RootDivisor(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._entries.items()))

    def __repr__(self):
        inner = ", ".join(f"{r}: {m}" for r, m in self._entries.items())
        return f"RootDivisor({{{inner}}})"

    def __add__(self, other: RootDivisor) -> RootDivisor:
        return RootDivisor(list(self.items()) + list(other.items()))

    def __neg__(self) -> RootDivisor:
        return RootDivisor({r: -m for r, m in self.items()})

    def degree(self) -> int:
        return sum(self._entries.values())

    def as_rational(self) -> RationalFunction:
        """``∏ (1 - z/α)^{n_α}`` as an exact rational function."""
        num, den = Poly([ONE]), Poly([ONE])
        for root, m in self.items():
            factor = Poly([ONE, -root.inverse()])
            if m > 0:
                num = num * factor**m
            else:
                den = den * factor ** (-m)
        return RationalFunction(num, den)

    @classmethod
    def from_rational(cls, r: RationalFunction) -> RootDivisor:
        """Root divisor of ``r / r(0)``; ``r`` must be finite and nonzero at 0."""
        if r.is_zero() or r.num[0].is_zero() or r.den[0].is_zero():
            raise ValueError("unsupported representative: algebraic divisor meets 0")
        entries = list(gaussian_roots(r.num).items()) if r.num.degree > 0 else []
        if r.den.degree > 0:
            entries += [(root, -m) for root, m in gaussian_roots(r.den).items()]
        return cls(entries)


def ene_exp(F: TruncatedLaurentSeries, G: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    """Linearized eñe product ``H_k = -k F_k G_k`` on the common window."""
    low, high = max(F.low, G.low), min(F.high, G.high)
    return TruncatedLaurentSeries.from_function(lambda k: -(F[k] * G[k]) * k, SeriesWindow(low, high))


def ene_series(f: TruncatedLaurentSeries, g: TruncatedLaurentSeries) -> NormalizedSeries:
    """``f ⋆ g = exp(log f ⋆_e log g)`` for normalized power series."""
    H = ene_exp(series_log(f), series_log(g))
    return NormalizedSeries.of(series_exp(H))


def ene_roots(a: RootDivisor, b: RootDivisor) -> RootDivisor:
    """Multiplicative convolution ``{α β : n_α m_β}``; collisions accumulate."""
    return RootDivisor([(alpha * beta, n * m) for alpha, n in a.items() for beta, m in b.items()])


def poly_from_divisor(d: RootDivisor, order: int = DEFAULT_ORDER) -> NormalizedSeries:
    """Expansion of ``∏ (1 - z/α)^{n_α}`` to the given order."""
    window = SeriesWindow(0, order)
    acc = TruncatedLaurentSeries.constant(ONE, order)
    for root, m in d.items():
        inv = root.inverse()
        if m > 0:
            factor = TruncatedLaurentSeries.from_dict({0: ONE, 1: -inv}, window)
        else:
            factor = TruncatedLaurentSeries.from_function(lambda k: inv**k, window)
        for _ in range(abs(m)):
            acc = series_mul(acc, factor)
    return NormalizedSeries.of(acc)


def universal_coeff_residual(a, b, n: int) -> GaussianRational:
    """``c_n + n a_n b_n`` where ``c_n`` is the ``z^n`` coefficient of ``f ⋆ g``.

    ``f = 1 + a_1 z + ...`` and ``g = 1 + b_1 z + ...``; the result depends only
    on ``a_1..a_{n-1}, b_1..b_{n-1}``.
    """
    if n < 1:
        raise ValueError("coefficient index must be at least 1")
    a = [as_scalar(x) for x in a]
    b = [as_scalar(x) for x in b]
    if len(a) < n or len(b) < n:
        raise ValueError(f"need at least {n} coefficients of each series")
    window = SeriesWindow(0, n)
    f = TruncatedLaurentSeries.from_function(lambda k: ONE if k == 0 else a[k - 1], window)
    g = TruncatedLaurentSeries.from_function(lambda k: ONE if k == 0 else b[k - 1], window)
    c = ene_series(f, g)[n]
    return c + a[n - 1] * b[n - 1] * n

