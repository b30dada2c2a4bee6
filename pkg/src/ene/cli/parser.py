"""Expression language: tokenizer, Pratt parser and canonical renderer.

Grammar sketch::

    expr   := literal | "z" | "(" expr ")" | "-" expr | expr op expr
            | expr "^" ["-"] INT | call
    call   := exp(expr) | R(INT, expr) | Li(INT) | ene(expr, expr) | zinf(INT, expr)

Binding, tightest first: ``^``, unary ``-``, ``* /``, ``+ -``.  Index
arguments of ``R``, ``Li`` and ``zinf`` are signed integer literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "BinOp",
    "Call",
    "Imag",
    "Neg",
    "Num",
    "ParseError",
    "Pow",
    "Var",
    "parse",
    "render",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


# AST ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Imag:
    coef: int


@dataclass(frozen=True)
class Var:
    name: str = "z"


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


# name -> tuple of argument kinds ("int" for an index literal, "expr" otherwise)
FUNCTIONS = {
    "exp": ("expr",),
    "R": ("int", "expr"),
    "Li": ("int",),
    "ene": ("expr", "expr"),
    "zinf": ("int", "expr"),
}


# tokens -------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<imag>\d+i(?![A-Za-z0-9_]))|(?P<int>\d+)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# Pratt parser ---------------------------------------------------------------------

_INFIX = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_UNARY = 30


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.column)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op",):
            found = "end of input" if self.tok.kind == "eof" else repr(self.tok.text)
            self.error(f"expected {text!r}, found {found}")
        return self.advance()

    def parse(self):
        node = self.expr(0)
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self, rbp: int):
        left = self.nud(self.advance())
        while self.tok.kind == "op" and _INFIX.get(self.tok.text, -1) > rbp:
            op = self.advance()
            if op.text == "^":
                left = Pow(left, self.int_literal("exponent"))
            else:
                left = BinOp(op.text, left, self.expr(_INFIX[op.text]))
        return left

    def nud(self, t: Token):
        if t.kind == "int":
            return Num(int(t.text))
        if t.kind == "imag":
            return Imag(int(t.text[:-1]))
        if t.kind == "ident":
            if t.text == "z":
                return Var()
            if t.text == "i":
                return Imag(1)
            if t.text in FUNCTIONS:
                return self.call(t)
            self.error(f"unknown identifier {t.text!r}", t)
        if t.kind == "op" and t.text == "(":
            node = self.expr(0)
            self.expect(")")
            return node
        if t.kind == "op" and t.text == "-":
            return Neg(self.expr(_UNARY))
        if t.kind == "eof":
            self.error("unexpected end of input", t)
        self.error(f"unexpected {t.text!r}", t)

    def int_literal(self, what: str) -> int:
        sign = 1
        paren = False
        if self.tok.text == "(" and self.tok.kind == "op":
            self.advance()
            paren = True
        if self.tok.text == "-" and self.tok.kind == "op":
            self.advance()
            sign = -1
        t = self.tok
        if t.kind != "int":
            self.error(f"non-integer {what} argument", t)
        self.advance()
        if paren:
            self.expect(")")
        return sign * int(t.text)

    def call(self, name: Token):
        kinds = FUNCTIONS[name.text]
        self.expect("(")
        args = []
        for j, kind in enumerate(kinds):
            if j:
                self.expect(",")
            if kind == "int":
                start = self.i
                value = self.int_literal("index")
                # reject "R(2/3, ...)": the index must be a bare integer
                if self.tok.kind == "op" and self.tok.text not in (",", ")"):
                    self.error("non-integer index argument", self.tokens[start])
                args.append(value)
            else:
                args.append(self.expr(0))
        self.expect(")")
        return Call(name.text, tuple(args))


def parse(text: str):
    """Parse an expression into an immutable AST."""
    return _Parser(text).parse()


# renderer -----------------------------------------------------------------------------


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _INFIX[node.op]
    if isinstance(node, Neg):
        return _UNARY
    if isinstance(node, Pow):
        return _INFIX["^"]
    return 100


def render(node) -> str:
    """Canonical text with the fewest parentheses that parse back to ``node``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Imag):
        return "i" if node.coef == 1 else f"{node.coef}i"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        inner = render(node.operand)
        if _prec(node.operand) < _UNARY:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Pow):
        base = render(node.base)
        if _prec(node.base) <= _INFIX["^"]:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, BinOp):
        p = _INFIX[node.op]
        left, right = render(node.left), render(node.right)
        if _prec(node.left) < p:
            left = f"({left})"
        # operators are left-associative: an equal-precedence right child needs parens,
        # and so does a unary minus, which would otherwise read as "a - -b"
        if _prec(node.right) <= p or isinstance(node.right, Neg):
            right = f"({right})"
        return f"{left} {node.op} {right}"
    if isinstance(node, Call):
        args = ", ".join(str(a) if isinstance(a, int) else render(a) for a in node.args)
        return f"{node.name}({args})"
    raise TypeError(f"not an expression node: {node!r}")
