"""Evaluation of parsed expressions into tagged exact values.

Value kinds:

* ``rational`` -- a :class:`RationalFunction`;
* ``transalgebraic`` -- ``R0 * exp(R1)``;
* ``series`` -- a truncated power series (normalized when it comes from ``ene``);
* ``exponential`` -- an element modulo constants held by its Laurent exponent;
* ``symbol`` -- a product of generator symbols ``exp(w R_m(z/u))``, kept in
  closed form.

``R(k, z0)`` and ``Li(k)`` stay symbolic while only scaled or negated, so
that ``exp`` of them is a symbol and ``ene`` of symbols is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import ONE, GaussianRational, RationalFunction
from ..euler import euler_R_rational
from ..jsonio import to_json
from ..series import DEFAULT_ORDER, SeriesWindow, TruncatedLaurentSeries, series_exp, series_of_rational
from ..transalg import (
    EneSymbol,
    NormalizedExponential,
    TransalgebraicFunction,
    ene_symbol_products,
    ene_symbol_rational,
    ene_transalg,
    exponent_series,
    merge_symbols,
)
from .parser import BinOp, Call, Imag, Neg, Num, Pow, Var, parse

__all__ = ["EvalError", "RunConfig", "Value", "evaluate", "evaluate_text", "to_series"]


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    order: int = DEFAULT_ORDER
    format: str = "text"
    epsilon: float = 0.1
    grid: str = "circle:0,0,0.5,64;circle:0,0,3,64"

    @property
    def window(self) -> SeriesWindow:
        return SeriesWindow(0, self.order)


@dataclass(frozen=True)
class EulerExponent:
    """``weight * R_order(z/param)`` before it is committed to a concrete type."""

    order: int
    param: GaussianRational
    weight: GaussianRational = ONE

    def degrade(self, cfg: RunConfig):
        sym = EneSymbol(self.order, self.param, self.weight)
        if self.order >= 1:
            return euler_R_rational(self.order).rescale(self.param).scale(self.weight)
        return sym.exponent_series(cfg.window)


@dataclass(frozen=True)
class Value:
    kind: str
    data: object

    def text(self) -> str:
        if self.kind == "symbol":
            return "*".join(str(s) for s in self.data) if self.data else "1"
        return str(self.data)

    def json(self):
        payload = [to_json(s) for s in self.data] if self.kind == "symbol" else to_json(self.data)
        return {"kind": self.kind, "value": payload, "text": self.text()}


# coercions ---------------------------------------------------------------------------


def _commit(x, cfg: RunConfig):
    return x.degrade(cfg) if isinstance(x, EulerExponent) else x


def _symbols_to_exponential(symbols, cfg: RunConfig) -> NormalizedExponential:
    total = TruncatedLaurentSeries.zero(cfg.order)
    for s in symbols:
        total = total + s.exponent_series(cfg.window)
    return NormalizedExponential(total)


def _to_exponential(x, cfg: RunConfig) -> NormalizedExponential:
    if isinstance(x, tuple):
        return _symbols_to_exponential(x, cfg)
    return exponent_series(_commit(x, cfg), cfg.window)


def _to_laurent(x, cfg: RunConfig) -> TruncatedLaurentSeries:
    x = _commit(x, cfg)
    if isinstance(x, RationalFunction):
        return series_of_rational(x, cfg.window)
    if isinstance(x, TruncatedLaurentSeries):
        return x
    raise EvalError(f"cannot use a {_kind(x)} value as a series here")


def _kind(x) -> str:
    if isinstance(x, RationalFunction):
        return "rational"
    if isinstance(x, TransalgebraicFunction):
        return "transalgebraic"
    if isinstance(x, TruncatedLaurentSeries):
        return "series"
    if isinstance(x, NormalizedExponential):
        return "exponential"
    if isinstance(x, tuple):
        return "symbol"
    return "exponent"


def _as_rational(symbols: tuple) -> RationalFunction | None:
    """The product as a rational function when every factor is an integer power of ``1 - z/u``."""
    rat = RationalFunction(ONE)
    for s in symbols:
        closed = s.as_transalgebraic() if s.order == 0 else None
        if closed is None:
            return None
        rat = rat * closed.rat
    return rat


def _merge(symbols) -> tuple:
    return tuple(merge_symbols(symbols))


# evaluation -----------------------------------------------------------------------------


def _scalar(x) -> GaussianRational:
    if isinstance(x, RationalFunction) and x.is_constant():
        return x.num[0]
    raise EvalError("expected a constant scalar")


def _add(a, b, cfg, sign=1):
    if isinstance(a, EulerExponent) and isinstance(b, EulerExponent) and (a.order, a.param) == (b.order, b.param):
        return EulerExponent(a.order, a.param, a.weight + b.weight * sign)
    a, b = _commit(a, cfg), _commit(b, cfg)
    if isinstance(a, RationalFunction) and isinstance(b, RationalFunction):
        return a + b if sign > 0 else a - b
    if isinstance(a, (RationalFunction, TruncatedLaurentSeries)) and isinstance(
        b, (RationalFunction, TruncatedLaurentSeries)
    ):
        sa, sb = _to_laurent(a, cfg), _to_laurent(b, cfg)
        return sa + sb if sign > 0 else sa - sb
    raise EvalError(f"cannot add {_kind(a)} and {_kind(b)} values")


def _mul(a, b, cfg):
    # scalar times symbolic exponent stays symbolic
    for x, y in ((a, b), (b, a)):
        if isinstance(x, EulerExponent) and isinstance(y, RationalFunction) and y.is_constant():
            return EulerExponent(x.order, x.param, x.weight * _scalar(y))
    if isinstance(a, tuple) and isinstance(b, tuple):
        return _merge(a + b)
    a, b = _commit(a, cfg), _commit(b, cfg)
    ka, kb = _kind(a), _kind(b)
    if ka == kb == "rational":
        return a * b
    if {ka, kb} <= {"rational", "transalgebraic"}:
        return _as_trans(a) * _as_trans(b)
    if {ka, kb} <= {"rational", "series"}:
        return _to_laurent(a, cfg) * _to_laurent(b, cfg)
    if isinstance(a, tuple) and isinstance(b, RationalFunction) and b.is_constant():
        return a
    if isinstance(b, tuple) and isinstance(a, RationalFunction) and a.is_constant():
        return b
    return _to_exponential(a, cfg) * _to_exponential(b, cfg)


def _as_trans(x) -> TransalgebraicFunction:
    return x if isinstance(x, TransalgebraicFunction) else TransalgebraicFunction(x)


def _pow(a, n: int, cfg):
    if isinstance(a, tuple):
        return _merge(EneSymbol(s.order, s.param, s.weight * n) for s in a)
    a = _commit(a, cfg)
    if isinstance(a, (RationalFunction, TransalgebraicFunction)):
        return a**n
    if isinstance(a, TruncatedLaurentSeries):
        if n < 0:
            return a.reciprocal() ** (-n)
        return a**n
    if isinstance(a, NormalizedExponential):
        return NormalizedExponential(a.exponent.scale(n))
    raise EvalError(f"cannot raise a {_kind(a)} value to a power")


def _neg(a, cfg):
    if isinstance(a, EulerExponent):
        return EulerExponent(a.order, a.param, -a.weight)
    a = _commit(a, cfg)
    if isinstance(a, (RationalFunction, TruncatedLaurentSeries)):
        return -a
    raise EvalError(f"cannot negate a {_kind(a)} value")


def _div(a, b, cfg):
    b_c = _commit(b, cfg) if not isinstance(b, tuple) else b
    if isinstance(b_c, RationalFunction) and b_c.is_constant():
        if b_c.is_zero():
            raise EvalError("division by zero")
        return _mul(a, RationalFunction(b_c.num[0].inverse()), cfg)
    return _mul(a, _pow(b, -1, cfg), cfg)


def _exp(x, cfg):
    if isinstance(x, EulerExponent):
        return (EneSymbol(x.order, x.param, x.weight),)
    x = _commit(x, cfg)
    if isinstance(x, RationalFunction):
        return TransalgebraicFunction(ONE, x)
    if isinstance(x, TruncatedLaurentSeries):
        return NormalizedExponential(x)
    raise EvalError(f"cannot exponentiate a {_kind(x)} value")


def _ene(a, b, cfg):
    if isinstance(a, tuple) and isinstance(b, tuple):
        return tuple(ene_symbol_products(a, b))
    a, b = _commit(a, cfg), _commit(b, cfg)
    for x, y in ((a, b), (b, a)):
        if isinstance(x, tuple) and isinstance(y, RationalFunction):
            out = []
            for s in x:
                out += ene_symbol_rational(s, y)
            return _merge(out)
    if isinstance(a, tuple) or isinstance(b, tuple):
        return _to_exponential(a, cfg).ene(_to_exponential(b, cfg))
    return ene_transalg(_lift(a, cfg), _lift(b, cfg), cfg.window)


def _lift(x, cfg):
    if isinstance(x, (RationalFunction, TransalgebraicFunction, NormalizedExponential, TruncatedLaurentSeries)):
        return x
    return _to_exponential(x, cfg)


def _eval(node, cfg: RunConfig):
    if isinstance(node, Num):
        return RationalFunction(node.value)
    if isinstance(node, Imag):
        return RationalFunction(GaussianRational(0, node.coef))
    if isinstance(node, Var):
        return RationalFunction.z()
    if isinstance(node, Neg):
        return _neg(_eval(node.operand, cfg), cfg)
    if isinstance(node, Pow):
        return _pow(_eval(node.base, cfg), node.exponent, cfg)
    if isinstance(node, BinOp):
        a, b = _eval(node.left, cfg), _eval(node.right, cfg)
        if node.op == "+":
            return _add(a, b, cfg)
        if node.op == "-":
            return _add(a, b, cfg, sign=-1)
        if node.op == "*":
            return _mul(a, b, cfg)
        return _div(a, b, cfg)
    if isinstance(node, Call):
        return _call(node, cfg)
    raise EvalError(f"unknown node {node!r}")


def _call(node: Call, cfg: RunConfig):
    name, args = node.name, node.args
    if name == "exp":
        return _exp(_eval(args[0], cfg), cfg)
    if name == "R":
        z0 = _scalar(_commit(_eval(args[1], cfg), cfg))
        if z0.is_zero():
            raise EvalError("R(k, z0) needs z0 != 0")
        return EulerExponent(args[0], z0)
    if name == "Li":
        if args[0] < 1:
            raise EvalError("Li(k) needs k >= 1")
        return EulerExponent(1 - args[0], ONE, -ONE)
    if name == "zinf":
        if args[0] == 0:
            raise EvalError("zinf(m, z0) needs m != 0")
        z0 = _scalar(_commit(_eval(args[1], cfg), cfg))
        if z0.is_zero():
            raise EvalError("zinf(m, z0) needs z0 != 0")
        return (EneSymbol.from_naming(args[0], z0),)
    if name == "ene":
        return _ene(_eval(args[0], cfg), _eval(args[1], cfg), cfg)
    raise EvalError(f"unknown function {name!r}")


def _finish(x, cfg: RunConfig) -> Value:
    x = _commit(x, cfg)
    if isinstance(x, tuple):
        rat = _as_rational(x)
        if rat is not None:
            return Value("rational", rat)
        return Value("symbol", x)
    if isinstance(x, NormalizedExponential):
        if not x.has_principal_part():
            return Value("series", x.series)
        return Value("exponential", x)
    if isinstance(x, TransalgebraicFunction) and x.is_rational():
        return Value("rational", x.rat)
    return Value(_kind(x), x)


def evaluate(node, cfg: RunConfig | None = None) -> Value:
    cfg = cfg or RunConfig()
    return _finish(_eval(node, cfg), cfg)


def evaluate_text(text: str, cfg: RunConfig | None = None) -> Value:
    return evaluate(parse(text), cfg)


def to_series(v: Value, cfg: RunConfig) -> TruncatedLaurentSeries:
    """Power-series view of a value; transcendental values are normalized at 0."""
    if v.kind == "rational":
        return series_of_rational(v.data, cfg.window)
    if v.kind == "series":
        return v.data.truncate(min(cfg.order, v.data.high))
    if v.kind == "symbol":
        return series_exp(_symbols_to_exponential(v.data, cfg).exponent)
    if v.kind == "transalgebraic":
        return exponent_series(v.data, cfg.window).series
    ex = v.data
    if ex.has_principal_part():
        raise EvalError("value has an exponential singularity at 0; no power series")
    return ex.series
