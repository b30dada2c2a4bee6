import io
import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ene.cli.evaluate import EvalError, RunConfig, evaluate_text, to_series
from ene.cli.main import format_euler_table, main
from ene.cli.parser import FUNCTIONS, BinOp, Call, Imag, Neg, Num, ParseError, Pow, Var, parse, render
from ene.cli.verify import SUITES, run_suite
from ene.core import RootDivisor

GOLDEN = Path(__file__).parent / "golden"
z = Var()


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# parsing ------------------------------------------------------------------------------


def test_parse_examples():
    tree = parse("ene(1 - z/2, 1 - z/3)")
    assert tree == Call("ene", (BinOp("-", Num(1), BinOp("/", z, Num(2))), BinOp("-", Num(1), BinOp("/", z, Num(3)))))
    assert parse("exp(R(3, 1/2))") == Call("exp", (Call("R", (3, BinOp("/", Num(1), Num(2)))),))


def test_precedence():
    assert parse("-z^2") == Neg(Pow(z, 2))
    assert parse("1 + 2*z^3") == BinOp("+", Num(1), BinOp("*", Num(2), Pow(z, 3)))
    assert parse("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse("2*-z") == BinOp("*", Num(2), Neg(z))
    assert parse("(1 + z)^2") == Pow(BinOp("+", Num(1), z), 2)
    assert parse("3i") == Imag(3)


@pytest.mark.parametrize(
    "text, column, message",
    [
        ("1 -", 4, "unexpected end"),
        ("foo", 1, "unknown identifier"),
        ("R(1/2, 3)", 3, "non-integer index argument"),
        ("z^z", 3, "non-integer exponent"),
        ("(1 + z", 7, ""),
        ("exp(1, 2)", 6, "expected ')'"),
        ("1 $ 2", 3, ""),
    ],
)
def test_parse_errors(text, column, message):
    with pytest.raises(ParseError) as info:
        parse(text)
    err = info.value
    assert err.line == 1
    if column is not None:
        assert err.column == column
    assert message in str(err)
    assert str(err).startswith(f"line 1, column {err.column}:")


def test_parse_error_line_numbers():
    with pytest.raises(ParseError) as info:
        parse("1 +\n  * 2")
    assert (info.value.line, info.value.column) == (2, 3)


CORPUS = [
    "1", "z", "i", "3i", "-z", "--z", "z^2", "(-z)^2", "-z^2", "z^-1",
    "1 + z", "1 - z", "1 - z/2", "z*z*z", "z/(1 - z)", "(1 - z)^-2", "2*z + 3*z^2", "1/2 - 3/4*i",
    "(1 + i)*z", "1 - (2 - z)", "z/(z/2)", "1/(1 - z)^2", "(z + 1)/(z - 3)", "z - -1", "2*-z",
    "exp(z)", "exp(-z)", "exp(1/z)", "exp(z^3)", "exp(1/(1 - z))", "(1 - z/2)*exp(1/(1 - z))",
    "exp(R(1, 1))", "exp(R(3, 1/2))", "exp(-R(2, 1 + i))", "exp(2*R(-1, -1))", "Li(2)", "exp(-Li(3))",
    "zinf(2, 3)", "zinf(-1, i)", "ene(1 - z/2, 1 - z/3)", "ene(exp(R(1, 1)), exp(-Li(2)))",
    "ene(ene(1 - z, 1 - 2*z), 1 + z)", "ene(exp(z), 1 - z)^2", "exp(R(2, 1))*exp(R(1, 2))",
    "(z^2 - 1)/(z - 1)", "exp(z)/exp(z)", "ene(zinf(1, 2), zinf(1, 3))", "exp(ene(z, z))",
    "1 - 2 - 3", "1 - (2 - 3)",
]


def test_corpus_size():
    assert len(CORPUS) == 50


@pytest.mark.parametrize("text", CORPUS)
def test_parse_render_parse(text):
    tree = parse(text)
    again = parse(render(tree))
    assert again == tree
    assert render(again) == render(tree)


def _ast():
    leaves = st.one_of(st.integers(0, 9).map(Num), st.integers(1, 3).map(Imag), st.just(z))

    def extend(sub):
        return st.one_of(
            sub.map(Neg),
            st.builds(BinOp, st.sampled_from("+-*/"), sub, sub),
            st.builds(Pow, sub, st.integers(-3, 3)),
            sub.map(lambda a: Call("exp", (a,))),
            st.builds(lambda k, a: Call("R", (k, a)), st.integers(-3, 3), sub),
            st.builds(lambda a, b: Call("ene", (a, b)), sub, sub),
        )

    return st.recursive(leaves, extend, max_leaves=8)


@given(_ast())
def test_render_round_trips_any_tree(tree):
    assert parse(render(tree)) == tree


def test_function_table():
    assert set(FUNCTIONS) == {"exp", "R", "Li", "ene", "zinf"}


# evaluation ---------------------------------------------------------------------------


def test_eval_examples():
    v = evaluate_text("ene(1 - z/2, 1 - z/3)", RunConfig(order=8))
    assert v.kind == "series" and v.text() == "1 - 1/6*z + O(z^9)"
    v = evaluate_text("ene(exp(R(1,1)), exp(-Li(2)))")
    assert v.kind == "rational" and v.text() == "-z + 1"


def test_eval_kinds():
    cfg = RunConfig(order=6)
    assert evaluate_text("(z^2 - 1)/(z - 1)", cfg).text() == "z + 1"
    assert evaluate_text("(1 - z/2)*exp(1/(1 - z))", cfg).kind == "transalgebraic"
    assert evaluate_text("exp(R(3, 1/2))", cfg).kind == "symbol"
    assert evaluate_text("zinf(2, 3)", cfg).text() == "exp(R(2, 9))"
    assert evaluate_text("ene(exp(1/z), exp(1/z))", cfg).kind == "exponential"


def test_symbol_text_reads_back():
    cfg = RunConfig(order=10)
    for text in ("exp(R(3, 1/2))", "exp(-2*R(-1, 1 + i))", "ene(zinf(1, 2), zinf(1, i))"):
        v = evaluate_text(text, cfg)
        assert evaluate_text(v.text(), cfg).text() == v.text()


def test_eval_series_matches_rational():
    cfg = RunConfig(order=6)
    s = to_series(evaluate_text("1/(1 - z)", cfg), cfg)
    assert [s[n] for n in range(7)] == [1] * 7


def test_eval_errors():
    with pytest.raises(ValueError, match="unsupported representative: algebraic divisor meets 0"):
        evaluate_text("ene(z, 1 - z)")
    with pytest.raises((EvalError, ZeroDivisionError)):
        evaluate_text("1/(z - z)")


# command line ---------------------------------------------------------------------------


def test_main_eval_and_ene():
    assert run("eval", "1 - z", "--order", "4") == (0, "-z + 1\n")
    code, out = run("ene", "1 - z/2", "1 - z/3", "--order", "8")
    assert code == 0 and out == "1 - 1/6*z + O(z^9)\n"
    code, out = run("eval", "ene(exp(R(1,1)), exp(-Li(2)))", "--format", "json")
    assert code == 0 and json.loads(out)["kind"] == "rational"


def test_main_series():
    code, out = run("series", "1/(1 - z)", "--order", "3")
    assert code == 0 and out == "1 + z + z^2 + z^3 + O(z^4)\n"
    code, out = run("series", "exp(R(1, 1))", "--order", "3", "--format", "json")
    assert code == 0 and json.loads(out)["value"]["high"] == 3


def test_main_usage_errors(capsys):
    assert run("eval", "1 -")[0] == 2
    assert "line 1, column 4" in capsys.readouterr().err
    assert run("eval", "ene(z, 1 - z)")[0] == 2
    assert "algebraic divisor meets 0" in capsys.readouterr().err
    assert run("verify", "nonsense")[0] == 2
    assert run("euler-table", "0")[0] == 2
    assert run("verify", "ring", "--max-k", "3")[0] == 2
    assert run()[0] == 2


@pytest.mark.parametrize("fmt, suffix", [("text", "txt"), ("json", "json")])
def test_golden_euler_table(fmt, suffix):
    golden = (GOLDEN / f"euler_table_7.{suffix}").read_bytes()
    code, out = run("euler-table", "7", "--format", fmt)
    assert code == 0
    assert out.encode() == golden
    assert format_euler_table(7, fmt).encode() == golden


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_verify_suites_pass(suite):
    code, out = run("verify", suite, "--order", "12", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["suite"] == suite
    assert report["failure_count"] == 0 and report["checks"] > 0


def test_verify_text_and_max_k():
    code, out = run("verify", "euler", "--max-k", "16")
    assert code == 0 and out.startswith("PASS euler:")


def test_verify_rejects_small_window():
    assert run("verify", "ring", "--order", "4")[0] == 2


def test_verify_is_deterministic():
    cfg = RunConfig(order=12)
    assert run_suite("ring", cfg, seed=3) == run_suite("ring", cfg, seed=3)
    assert run_suite("bridge", cfg) == run_suite("bridge", cfg)


def test_verify_bridge_negative_control():
    from ene.core import ene_roots

    def flipped(a, b):
        good = ene_roots(a, b)
        return RootDivisor([(-r, m) for r, m in good.items()])

    report = run_suite("bridge", RunConfig(order=12), impl={"ene_roots": flipped})
    assert not report["passed"] and report["failures"]
    assert "law" in report["failures"][0]


def test_main_verify_failure_exit_code(monkeypatch):
    import ene.cli.verify as verify

    def broken(cfg, impl=None, **kw):
        return verify.suite_bridge(cfg, impl={"ene_roots": lambda a, b: RootDivisor({})}, **kw)

    monkeypatch.setitem(verify.SUITES, "bridge", broken)
    code, out = run("verify", "bridge")
    assert code == 1 and out.startswith("FAIL bridge:")


def test_main_limit():
    code, out = run("limit", "--expr", "exp(z)", "--kmax", "512", "--grid", "circle:0,0,0.4,64;circle:0,0,3,64")
    assert code == 0
    assert "fitted decay exponent" in out
    code, out = run("limit", "--expr", "exp(1/(1 - z))", "--kmax", "128", "--format", "json")
    payload = json.loads(out)
    assert payload["convergence"]["ks"] == [64, 128]
    assert payload["collapse"]["k"] == 128
    assert run("limit", "--expr", "exp(z)", "--kmax", "64", "--grid", "circle:0,0,1,8", "--epsilon", "1.5")[0] == 2
