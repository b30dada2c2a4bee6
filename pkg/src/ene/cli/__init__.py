"""Expression language and command line for the ``ene`` package."""

from .evaluate import EvalError, RunConfig, Value, evaluate, evaluate_text, to_series
from .main import main
from .parser import ParseError, parse, render
from .verify import SUITES, run_suite

__all__ = [
    "SUITES",
    "EvalError",
    "ParseError",
    "RunConfig",
    "Value",
    "evaluate",
    "evaluate_text",
    "main",
    "parse",
    "render",
    "run_suite",
    "to_series",
]
