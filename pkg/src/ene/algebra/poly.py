"""Dense univariate polynomials over the Gaussian rationals."""

from __future__ import annotations

from .scalar import ONE, ZERO, GaussianRational, as_scalar

__all__ = ["Poly", "X"]


def _trim(coeffs: list[GaussianRational]) -> tuple[GaussianRational, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Polynomial with coefficients stored lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim([as_scalar(c) for c in coeffs])

    @classmethod
    def _from_trusted(cls, coeffs: list[GaussianRational]) -> Poly:
        p = object.__new__(cls)
        p.coeffs = _trim(coeffs)
        return p

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c=1) -> Poly:
        return cls([ZERO] * n + [as_scalar(c)])

    @classmethod
    def from_roots(cls, roots) -> Poly:
        """Monic polynomial with the given roots (repeat a root for multiplicity)."""
        p = cls([ONE])
        for r in roots:
            p = p * cls([-as_scalar(r), ONE])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> GaussianRational:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            return ZERO
        return self.coeffs[-1]

    def monic(self) -> Poly:
        lc = self.leading()
        if lc.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        if lc == ONE:
            return self
        inv = lc.inverse()
        return Poly._from_trusted([c * inv for c in self.coeffs])

    def valuation(self) -> int:
        """Multiplicity of 0 as a root (-1 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return -1

    # ring operations ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._from_trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._from_trusted([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly._from_trusted(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly([ONE])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c) -> Poly:
        c = as_scalar(c)
        return Poly._from_trusted([x * c for x in self.coeffs])

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dd = other.degree
        inv_lc = other.leading().inverse()
        if len(rem) <= dd:
            return Poly(), self
        quot = [ZERO] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            q = c * inv_lc
            quot[i - dd] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - q * oc
        return Poly._from_trusted(quot), Poly._from_trusted(rem[:dd])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def gcd(self, other: Poly) -> Poly:
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.monic()

    # calculus and substitutions -------------------------------------------------

    def derivative(self) -> Poly:
        return Poly._from_trusted([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        x = as_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_complex(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + complex(c)
        return acc

    def rescale(self, u) -> Poly:
        """The polynomial ``p(z/u)``."""
        u = as_scalar(u)
        if u.is_zero():
            raise ZeroDivisionError("rescale by zero")
        inv = u.inverse()
        out, f = [], ONE
        for c in self.coeffs:
            out.append(c * f)
            f = f * inv
        return Poly._from_trusted(out)

    def shift(self, a) -> Poly:
        """The polynomial ``p(z + a)`` (Taylor shift)."""
        a = as_scalar(a)
        out = [ZERO] * len(self.coeffs)
        for c in reversed(self.coeffs):
            # out = out * (z + a) + c
            carry = ZERO
            nxt = [ZERO] * len(out)
            for i in range(len(out)):
                nxt[i] = out[i] * a + carry
                carry = out[i]
            out = nxt
            out[0] = out[0] + c
        return Poly._from_trusted(out)

    def reverse(self, n: int | None = None) -> Poly:
        """``z**n * p(1/z)``; ``n`` defaults to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        return Poly._from_trusted(list(reversed(list(self.coeffs) + [ZERO] * (n - self.degree))))

    def squarefree_part(self) -> Poly:
        if self.degree < 1:
            return Poly([ONE])
        return self.exact_div(self.gcd(self.derivative())).monic()

    # equality / text ------------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        return render_poly(self)


def _coerce(x) -> Poly | None:
    if isinstance(x, Poly):
        return x
    try:
        return Poly([as_scalar(x)]) if not isinstance(x, str) else None
    except TypeError:
        return None


def _render_coeff(c: GaussianRational) -> str:
    s = str(c)
    if not c.is_real() and c.re != 0:
        return f"({s})"
    return s


def render_poly(p: Poly, var: str = "z") -> str:
    """Human-readable form, highest degree first, e.g. ``z^2 - 1/2*z + 3``."""
    if p.is_zero():
        return "0"
    terms = []
    for n in range(p.degree, -1, -1):
        c = p.coeffs[n]
        if c.is_zero():
            continue
        neg = c.is_real() and c.re < 0 or (c.re == 0 and c.im < 0)
        mag = -c if neg else c
        if n == 0:
            body = _render_coeff(mag)
        else:
            mono = var if n == 1 else f"{var}^{n}"
            body = mono if mag == ONE else f"{_render_coeff(mag)}*{mono}"
        terms.append(("-" if neg else "+", body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


X = Poly([ZERO, ONE])
