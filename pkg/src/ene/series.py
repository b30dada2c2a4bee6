"""Truncated Laurent series over Q(i).

A :class:`TruncatedLaurentSeries` stores exact coefficients ``c_k`` for
``k`` in a window ``[low, high]``.  The series starts at ``low`` (nothing
lives below it) and is truncated after ``high``: coefficients above
``high`` are unknown, so every operation shrinks ``high`` to what it can
actually prove.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ONE, ZERO, GaussianRational, RationalFunction, as_scalar
from .algebra.poly import Poly

__all__ = [
    "DEFAULT_ORDER",
    "SeriesError",
    "SeriesWindow",
    "TruncatedLaurentSeries",
    "series_exp",
    "series_log",
    "series_mul",
    "series_of_rational",
    "series_rescale",
    "series_z_derivative",
]

DEFAULT_ORDER = 16


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesWindow:
    low: int = 0
    high: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.low > 0 or self.high < 0:
            raise ValueError(f"window must satisfy low <= 0 <= high, got [{self.low}, {self.high}]")

    @classmethod
    def of(cls, order: int, low: int = 0) -> SeriesWindow:
        return cls(low, order)


class TruncatedLaurentSeries:
    __slots__ = ("low", "high", "coeffs")

    def __init__(self, coeffs, low: int = 0, high: int | None = None):
        cs = [as_scalar(c) for c in coeffs]
        if high is None:
            high = low + len(cs) - 1
        if low > 0:
            raise ValueError("series window must start at or below index 0")
        if high < 0:
            raise ValueError("series window must reach index 0")
        need = high - low + 1
        if len(cs) > need:
            raise ValueError("more coefficients than the window holds")
        cs.extend([ZERO] * (need - len(cs)))
        self.low = low
        self.high = high
        self.coeffs = tuple(cs)

    @classmethod
    def _trusted(cls, coeffs: list[GaussianRational], low: int, high: int) -> TruncatedLaurentSeries:
        s = object.__new__(cls)
        s.low, s.high, s.coeffs = low, high, tuple(coeffs)
        return s

    @classmethod
    def from_dict(cls, terms: dict, window: SeriesWindow) -> TruncatedLaurentSeries:
        cs = [ZERO] * (window.high - window.low + 1)
        for k, c in terms.items():
            if window.low <= k <= window.high:
                cs[k - window.low] = as_scalar(c)
            elif k < window.low and not as_scalar(c).is_zero():
                raise ValueError(f"term at index {k} falls below the window")
        return cls._trusted(cs, window.low, window.high)

    @classmethod
    def from_function(cls, fn, window: SeriesWindow) -> TruncatedLaurentSeries:
        """Coefficients ``fn(k)`` for every ``k`` in the window."""
        return cls._trusted([as_scalar(fn(k)) for k in range(window.low, window.high + 1)], window.low, window.high)

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> TruncatedLaurentSeries:
        return cls.from_dict({0: c}, SeriesWindow(0, order))

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER, low: int = 0) -> TruncatedLaurentSeries:
        return cls.from_dict({}, SeriesWindow(low, order))

    @property
    def window(self) -> SeriesWindow:
        return SeriesWindow(self.low, self.high)

    def __getitem__(self, k: int) -> GaussianRational:
        if k > self.high:
            raise IndexError(f"coefficient {k} lies beyond truncation order {self.high}")
        if k < self.low:
            return ZERO
        return self.coeffs[k - self.low]

    def items(self):
        return ((k, c) for k, c in zip(range(self.low, self.high + 1), self.coeffs))

    def coefficients(self, start: int, stop: int) -> list[GaussianRational]:
        """Coefficients for ``start <= k <= stop``."""
        return [self[k] for k in range(start, stop + 1)]

    def valuation(self) -> int:
        """Index of the first nonzero coefficient, ``high + 1`` if none is known."""
        for k, c in self.items():
            if not c.is_zero():
                return k
        return self.high + 1

    def principal_part(self) -> TruncatedLaurentSeries:
        return TruncatedLaurentSeries._trusted(
            [c if k < 0 else ZERO for k, c in self.items()], self.low, self.high
        )

    def regular_part(self) -> TruncatedLaurentSeries:
        """Nonnegative-index part, as a power series."""
        return TruncatedLaurentSeries._trusted(list(self.coeffs[-self.low:]), 0, self.high)

    def has_principal_part(self) -> bool:
        return any(not c.is_zero() for k, c in self.items() if k < 0)

    def truncate(self, high: int) -> TruncatedLaurentSeries:
        if high > self.high:
            raise SeriesError(f"cannot extend truncation order {self.high} to {high}")
        return TruncatedLaurentSeries._trusted(list(self.coeffs[: high - self.low + 1]), self.low, high)

    def extend_low(self, low: int) -> TruncatedLaurentSeries:
        """Same series viewed on a window starting further down (zero-filled)."""
        if low >= self.low:
            return self
        return TruncatedLaurentSeries._trusted([ZERO] * (self.low - low) + list(self.coeffs), low, self.high)

    def agrees_with(self, other: TruncatedLaurentSeries, upto: int | None = None) -> bool:
        """Exact equality on the common known window (optionally capped at ``upto``)."""
        high = min(self.high, other.high)
        if upto is not None:
            if upto > high:
                return False
            high = upto
        low = min(self.low, other.low)
        return all(self[k] == other[k] for k in range(low, high + 1))

    # arithmetic -----------------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other, self)
        if other is None:
            return NotImplemented
        low, high = min(self.low, other.low), min(self.high, other.high)
        return TruncatedLaurentSeries._trusted([self[k] + other[k] for k in range(low, high + 1)], low, high)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurentSeries._trusted([-c for c in self.coeffs], self.low, self.high)

    def __sub__(self, other):
        other = _coerce(other, self)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other, self)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return series_mul(self, other)
        try:
            c = as_scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return series_mul(self, other.reciprocal())
        try:
            c = as_scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.scale(c.inverse())

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.reciprocal()
        n = abs(n)
        # 1 is exact to any order; series_mul trims to what the factors determine
        result = TruncatedLaurentSeries.constant(ONE, base.high + n * max(base.valuation(), 0))
        for _ in range(n):
            result = series_mul(result, base)
        return result

    def scale(self, c) -> TruncatedLaurentSeries:
        c = as_scalar(c)
        return TruncatedLaurentSeries._trusted([x * c for x in self.coeffs], self.low, self.high)

    def reciprocal(self) -> TruncatedLaurentSeries:
        """``1/s`` for a series with a known nonzero leading coefficient."""
        v = self.valuation()
        if v > self.high:
            raise ZeroDivisionError("reciprocal of a series with no known nonzero coefficient")
        lead = [self[k] for k in range(v, self.high + 1)]
        n = len(lead)
        inv0 = lead[0].inverse()
        out: list[GaussianRational] = []
        for k in range(n):
            acc = ONE if k == 0 else ZERO
            for j in range(1, k + 1):
                acc = acc - lead[j] * out[k - j]
            out.append(acc * inv0)
        # 1/s = z^-v * (out), known up to index (n - 1) - v
        high = n - 1 - v
        low = min(0, -v)
        if high < 0:
            raise SeriesError("reciprocal has no known coefficient at index 0")
        terms = {k - v: c for k, c in enumerate(out) if k - v <= high}
        return TruncatedLaurentSeries.from_dict(terms, SeriesWindow(low, high))

    def derivative(self) -> TruncatedLaurentSeries:
        """``d/dz``; the constant term's knowledge is lost at the top of the window."""
        terms = {k - 1: c * k for k, c in self.items() if k != 0}
        low = self.low - 1 if self.low < 0 else 0
        high = self.high - 1
        if high < 0:
            raise SeriesError("derivative of a constant-order series is unknown")
        return TruncatedLaurentSeries.from_dict(terms, SeriesWindow(low, high))

    def integral(self) -> TruncatedLaurentSeries:
        """Antiderivative with zero constant term; needs a zero ``z^-1`` coefficient."""
        if self.low <= -1 and not self[-1].is_zero():
            raise SeriesError("series with a residue has no Laurent antiderivative")
        terms = {k + 1: c / (k + 1) for k, c in self.items() if k != -1}
        return TruncatedLaurentSeries.from_dict(terms, SeriesWindow(min(0, self.low + 1), self.high + 1))

    # equality / text ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return (self.low, self.high, self.coeffs) == (other.low, other.high, other.coeffs)

    def __hash__(self):
        return hash((self.low, self.high, self.coeffs))

    def __repr__(self):
        return f"TruncatedLaurentSeries({str(self)!r})"

    def __str__(self):
        return render_series(self)


def _coerce(x, like: TruncatedLaurentSeries) -> TruncatedLaurentSeries | None:
    if isinstance(x, TruncatedLaurentSeries):
        return x
    try:
        c = as_scalar(x)
    except (TypeError, ValueError):
        return None
    return TruncatedLaurentSeries.from_dict({0: c}, SeriesWindow(0, like.high))


def _fmt_coeff(c: GaussianRational) -> tuple[bool, str]:
    if c.is_real():
        return c.re < 0, str(abs(c.re))
    if c.re == 0:
        return c.im < 0, str(-c if c.im < 0 else c)
    return False, f"({c})"


def render_series(s: TruncatedLaurentSeries, var: str = "z") -> str:
    """``1 - 1/6*z + O(z^9)`` style rendering, lowest index first."""
    parts: list[str] = []
    for k, c in s.items():
        if c.is_zero():
            continue
        neg, mag = _fmt_coeff(c)
        if k == 0:
            body = mag
        else:
            mono = var if k == 1 else f"{var}^{k}" if k > 0 else f"{var}^({k})"
            body = mono if mag == "1" else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    tail = f"O({var})" if s.high + 1 == 1 else f"O({var}^{s.high + 1})"
    if not parts:
        return tail
    return " ".join(parts) + " + " + tail


# operations --------------------------------------------------------------------------


def series_mul(s: TruncatedLaurentSeries, t: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    """Cauchy product on the window it provably determines."""
    vs, vt = s.valuation(), t.valuation()
    high = min(s.high + vt, t.high + vs)
    low = min(0, s.low + t.low)
    if high < 0:
        raise SeriesError("product has no known coefficient at index 0")
    out = [ZERO] * (high - low + 1)
    for i in range(max(s.low, vs), s.high + 1):
        a = s[i]
        if a.is_zero():
            continue
        for j in range(max(t.low, vt), min(t.high, high - i) + 1):
            b = t[j]
            if b.is_zero():
                continue
            k = i + j - low
            if k >= 0:
                out[k] = out[k] + a * b
    return TruncatedLaurentSeries._trusted(out, low, high)


def _check_power_series(s: TruncatedLaurentSeries, message: str) -> TruncatedLaurentSeries:
    if s.has_principal_part():
        raise SeriesError(message)
    return s.regular_part()


def series_log(s: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    """Logarithm of a power series with constant term exactly 1.

    Computed as the termwise integral of ``s'/s``, which keeps every step exact.
    """
    s = _check_power_series(s, "series not normalized")
    if s[0] != ONE:
        raise SeriesError("series not normalized")
    n = s.high
    a = s.coeffs
    # b = s'/s via n*F_n = n*a_n - sum_{k=1}^{n-1} k*F_k*a_{n-k}
    f = [ZERO] * (n + 1)
    for m in range(1, n + 1):
        acc = a[m] * m
        for k in range(1, m):
            if not f[k].is_zero() and not a[m - k].is_zero():
                acc = acc - f[k] * a[m - k] * k
        f[m] = acc / m
    return TruncatedLaurentSeries._trusted(f, 0, n)


def series_exp(F: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    """``exp(F)`` for a power series with zero constant term."""
    F = _check_power_series(F, "exponent not formal-nilpotent")
    if not F[0].is_zero():
        raise SeriesError("exponent not formal-nilpotent")
    n = F.high
    f = F.coeffs
    # E' = F'E  =>  m e_m = sum_{k=1}^{m} k f_k e_{m-k}
    e = [ONE] + [ZERO] * n
    for m in range(1, n + 1):
        acc = ZERO
        for k in range(1, m + 1):
            if not f[k].is_zero():
                acc = acc + f[k] * e[m - k] * k
        e[m] = acc / m
    return TruncatedLaurentSeries._trusted(e, 0, n)


def series_z_derivative(s: TruncatedLaurentSeries) -> TruncatedLaurentSeries:
    """The Euler operator ``z d/dz``: ``c_k -> k c_k`` on the same window."""
    return TruncatedLaurentSeries._trusted([c * k for k, c in s.items()], s.low, s.high)


def series_rescale(s: TruncatedLaurentSeries, u) -> TruncatedLaurentSeries:
    """``s(z/u)``: ``c_k -> c_k u^-k``."""
    u = as_scalar(u)
    if u.is_zero():
        raise ZeroDivisionError("rescale by zero")
    inv = u.inverse()
    return TruncatedLaurentSeries._trusted([c * inv**k for k, c in s.items()], s.low, s.high)


def series_of_rational(r: RationalFunction, window: SeriesWindow | None = None) -> TruncatedLaurentSeries:
    """Laurent expansion of ``r`` at 0.

    The window's low end is pushed down when ``r`` has a deeper pole at 0.
    """
    if window is None:
        window = SeriesWindow()
    m = r.den.valuation()
    den = Poly(r.den.coeffs[m:])
    count = window.high + m + 1
    inv0 = den[0].inverse()
    out: list[GaussianRational] = []
    for k in range(count):
        acc = r.num[k]
        for j in range(1, min(k, den.degree) + 1):
            acc = acc - den.coeffs[j] * out[k - j]
        out.append(acc * inv0)
    low = min(window.low, -m)
    terms = {k - m: c for k, c in enumerate(out)}
    return TruncatedLaurentSeries.from_dict(terms, SeriesWindow(low, window.high))

