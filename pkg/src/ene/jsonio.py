"""JSON encodings of exact objects.

Real scalars are ``"p/q"`` strings (or integer strings); complex ones are
``{"re": ..., "im": ...}`` with string parts.  Floats appear only in
numerical reports.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import GaussianRational, Poly, RationalFunction
from .core import RootDivisor
from .limits import CollapseReport, ConvergenceReport
from .series import TruncatedLaurentSeries
from .transalg import INF, EneSymbol, NormalizedExponential, TransalgebraicDivisor, TransalgebraicFunction

__all__ = ["from_json", "scalar_from_json", "to_json"]


def _frac(text: str) -> Fraction:
    return Fraction(text)


def scalar_to_json(c: GaussianRational):
    if c.is_real():
        return str(c.re)
    return {"re": str(c.re), "im": str(c.im)}


def scalar_from_json(obj) -> GaussianRational:
    if isinstance(obj, str):
        return GaussianRational(_frac(obj))
    if isinstance(obj, int) and not isinstance(obj, bool):
        return GaussianRational(obj)
    if isinstance(obj, dict) and set(obj) == {"re", "im"}:
        return GaussianRational(_frac(obj["re"]), _frac(obj["im"]))
    raise ValueError(f"not an exact scalar: {obj!r}")


def _point_to_json(p):
    return "inf" if p is INF else scalar_to_json(p)


def _point_from_json(obj):
    return INF if obj == "inf" else scalar_from_json(obj)


def _complex_to_json(z):
    if z is INF:
        return "inf"
    z = complex(z)
    return {"re": _finite(z.real), "im": _finite(z.imag)}


def _finite(x: float) -> float:
    if not math.isfinite(x):
        raise ValueError("non-finite value in numerical report")
    return float(x)


def to_json(obj):
    """Plain JSON-ready structure for any exact object of the library."""
    if isinstance(obj, GaussianRational):
        return scalar_to_json(obj)
    if isinstance(obj, (int, Fraction)) and not isinstance(obj, bool):
        return str(Fraction(obj))
    if isinstance(obj, Poly):
        return [scalar_to_json(c) for c in obj.coeffs]
    if isinstance(obj, RationalFunction):
        return {"num": to_json(obj.num), "den": to_json(obj.den)}
    if isinstance(obj, TruncatedLaurentSeries):
        return {"low": obj.low, "high": obj.high, "coeffs": [scalar_to_json(c) for c in obj.coeffs]}
    if isinstance(obj, RootDivisor):
        return [{"root": scalar_to_json(r), "mult": m} for r, m in obj.items()]
    if isinstance(obj, TransalgebraicDivisor):
        return {
            "algebraic": [{"point": _point_to_json(p), "mult": n} for p, n in obj.algebraic.items()],
            "transcendental": [{"point": _point_to_json(p), "order": d} for p, d in obj.transcendental.items()],
        }
    if isinstance(obj, TransalgebraicFunction):
        return {"rat": to_json(obj.rat), "exp": to_json(obj.exp)}
    if isinstance(obj, EneSymbol):
        return {
            "order": obj.order,
            "param": scalar_to_json(obj.param),
            "weight": scalar_to_json(obj.weight),
            "kind": obj.kind,
        }
    if isinstance(obj, NormalizedExponential):
        return {"exponent": to_json(obj.exponent)}
    if isinstance(obj, ConvergenceReport):
        return {
            "ks": list(obj.ks),
            "errors": [_finite(e) for e in obj.errors],
            "ratios": [None if r is None else _finite(r) for r in obj.ratios()],
            "decay_exponent": obj.decay_exponent if math.isfinite(obj.decay_exponent) else None,
            "hausdorff": [_finite(h) for h in obj.hausdorff],
        }
    if isinstance(obj, CollapseReport):
        return {
            "k": obj.k,
            "zeros": [{"point": _complex_to_json(p), "mult": m} for p, m in obj.zeros],
            "poles": [{"point": _complex_to_json(p), "mult": m} for p, m in obj.poles],
            "clusters": [
                {
                    "singularity": _complex_to_json(c.point),
                    "zeros": len(c.zeros),
                    "poles": len(c.poles),
                    "distinct_locations": c.distinct_locations,
                    "max_distance": _finite(c.max_distance()),
                }
                for c in obj.clusters
            ],
        }
    raise TypeError(f"no JSON encoding for {type(obj).__name__}")


def _poly(obj) -> Poly:
    return Poly([scalar_from_json(c) for c in obj])


def from_json(kind: str, obj):
    """Inverse of :func:`to_json` for the exact types, selected by ``kind``."""
    if kind == "scalar":
        return scalar_from_json(obj)
    if kind == "poly":
        return _poly(obj)
    if kind == "rational":
        return RationalFunction(_poly(obj["num"]), _poly(obj["den"]))
    if kind == "series":
        return TruncatedLaurentSeries([scalar_from_json(c) for c in obj["coeffs"]], obj["low"], obj["high"])
    if kind == "root_divisor":
        return RootDivisor([(scalar_from_json(e["root"]), e["mult"]) for e in obj])
    if kind == "transalgebraic_divisor":
        return TransalgebraicDivisor(
            {_point_from_json(e["point"]): e["mult"] for e in obj["algebraic"]},
            {_point_from_json(e["point"]): e["order"] for e in obj["transcendental"]},
        )
    if kind == "transalgebraic":
        return TransalgebraicFunction(from_json("rational", obj["rat"]), from_json("rational", obj["exp"]))
    if kind == "symbol":
        return EneSymbol(obj["order"], scalar_from_json(obj["param"]), scalar_from_json(obj["weight"]))
    if kind == "exponential":
        return NormalizedExponential(from_json("series", obj["exponent"]))
    raise ValueError(f"unknown kind {kind!r}")
