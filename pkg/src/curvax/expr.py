"""Parser and evaluator for textual parametric space curves.

A curve is three comma-separated expressions in one real parameter, wrapped
in parentheses, e.g. ``(cos(t), sin(t), t)``. The grammar (EBNF):

    curve    = "(" expr "," expr "," expr ")" ;
    expr     = term { ("+"|"-") term } ;
    term     = factor { ("*"|"/") factor } ;
    factor   = ["-"] power ;
    power    = atom [ "^" factor ] ;
    atom     = number | ident | ident "(" expr ")" | "(" expr ")" ;
    ident    = "t" | "s" | "pi" | "e" | "sin" | "cos" | "tan"
             | "sqrt" | "exp" | "log" | "abs" ;

``^`` is right-associative and binds tighter than unary minus, so ``-t^2``
means ``-(t^2)``. Whitespace is ignored. Implicit multiplication (``2t``) and
unicode superscripts are rejected. Either ``t`` or ``s`` may name the
parameter, but all three components must agree.

Exponents that are literal integers are stored as integer-power nodes so that
downstream jet arithmetic stays exact at points like t=0 for t^3.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import ArityError, DomainError, ParseError

FUNCTIONS = ("sin", "cos", "tan", "sqrt", "exp", "log", "abs")
CONSTANTS = {"pi": math.pi, "e": math.e}
PARAMETER_NAMES = ("t", "s")

# Guard against pathological exponents in integer-power nodes.
MAX_INT_EXPONENT = 512


# --- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    """The curve parameter (name normalized away; CurveDef keeps the spelling)."""


@dataclass(frozen=True)
class Const:
    name: str


@dataclass(frozen=True)
class Neg:
    child: "Expr"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * / ^   (^ only for non-integer-literal exponents)
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class IntPow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Const, Neg, Call, BinOp, IntPow]


@dataclass(frozen=True)
class CurveDef:
    """Parsed parametric curve: exactly three expression components."""

    components: tuple[Expr, Expr, Expr]
    parameter_name: str
    source_text: str


# --- tokenizer -------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<number>(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_]+)
  | (?P<op>[-+*/^(),])
  | (?P<ws>\s+)
""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # number | ident | op | end
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(pos, f"a token (got {text[pos]!r})")
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


# --- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0
        self.param_name: str | None = None

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _advance(self) -> _Token:
        tok = self.current
        self.index += 1
        return tok

    def _expect_op(self, op: str) -> None:
        tok = self.current
        if tok.kind != "op" or tok.text != op:
            raise ParseError(tok.position, f"'{op}'")
        self.index += 1

    def _at_op(self, *ops: str) -> bool:
        tok = self.current
        return tok.kind == "op" and tok.text in ops

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self._at_op("+", "-"):
            op = self._advance().text
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self) -> Expr:
        node = self.parse_factor()
        while self._at_op("*", "/"):
            op = self._advance().text
            node = BinOp(op, node, self.parse_factor())
        return node

    def parse_factor(self) -> Expr:
        if self._at_op("-"):
            self._advance()
            return Neg(self.parse_power())
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self._at_op("^"):
            self._advance()
            exponent = self.parse_factor()  # right-associative
            return _make_power(base, exponent)
        return base

    def parse_atom(self) -> Expr:
        tok = self.current
        if tok.kind == "number":
            self._advance()
            return Num(float(tok.text))
        if tok.kind == "ident":
            self._advance()
            name = tok.text
            if name in FUNCTIONS:
                self._expect_op("(")
                arg = self.parse_expr()
                self._expect_op(")")
                return Call(name, arg)
            if name in CONSTANTS:
                return Const(name)
            if name in PARAMETER_NAMES:
                if self.param_name is None:
                    self.param_name = name
                elif self.param_name != name:
                    raise ParseError(tok.position, f"parameter '{self.param_name}'")
                return Var()
            raise ParseError(tok.position, "a known identifier")
        if self._at_op("("):
            self._advance()
            node = self.parse_expr()
            self._expect_op(")")
            return node
        raise ParseError(tok.position, "a number, identifier, or '('")


def _make_power(base: Expr, exponent: Expr) -> Expr:
    """Fold literal-integer exponents into IntPow; keep the rest symbolic."""
    sign = 1
    node = exponent
    while isinstance(node, Neg):
        sign = -sign
        node = node.child
    if isinstance(node, Num) and float(node.value).is_integer():
        n = sign * int(node.value)
        if abs(n) <= MAX_INT_EXPONENT:
            return IntPow(base, n)
    return BinOp("^", base, exponent)


def parse_expr(text: str, parameter_name: str | None = None) -> Expr:
    """Parse a single expression (mostly a test/REPL convenience)."""
    p = _Parser(text)
    if parameter_name is not None:
        p.param_name = parameter_name
    node = p.parse_expr()
    if p.current.kind != "end":
        raise ParseError(p.current.position, "end of input")
    return node


def parse_curve(text: str) -> CurveDef:
    """Parse ``(x(t), y(t), z(t))`` into a CurveDef.

    Raises ParseError on malformed input and ArityError when the component
    count is not exactly three.
    """
    p = _Parser(text)
    p._expect_op("(")
    components = [p.parse_expr()]
    while p._at_op(","):
        p._advance()
        components.append(p.parse_expr())
    p._expect_op(")")
    if p.current.kind != "end":
        raise ParseError(p.current.position, "end of input")
    if len(components) != 3:
        raise ArityError(len(components))
    name = p.param_name if p.param_name is not None else "t"
    return CurveDef(tuple(components), name, text)


# --- formatting ------------------------------------------------------------

_PREC_ADD, _PREC_NEG, _PREC_MUL, _PREC_POW, _PREC_ATOM = 1, 2, 3, 4, 5


def format_expr(e: Expr, parameter_name: str = "t", _parent: int = 0) -> str:
    text, prec = _fmt(e, parameter_name)
    if prec < _parent:
        return f"({text})"
    return text


def _fmt(e: Expr, pname: str) -> tuple[str, int]:
    if isinstance(e, Num):
        v = e.value
        if math.isfinite(v) and abs(v) < 1e16 and v == int(v):
            return str(int(v)), _PREC_ATOM
        return repr(v), _PREC_ATOM
    if isinstance(e, Var):
        return pname, _PREC_ATOM
    if isinstance(e, Const):
        return e.name, _PREC_ATOM
    if isinstance(e, Call):
        return f"{e.func}({format_expr(e.arg, pname)})", _PREC_ATOM
    if isinstance(e, Neg):
        # unary minus binds looser than * and /, so anything below ^ needs parens
        return f"-{format_expr(e.child, pname, _PREC_POW)}", _PREC_NEG
    if isinstance(e, IntPow):
        base = format_expr(e.base, pname, _PREC_POW + 1)
        return f"{base}^{e.exponent}", _PREC_POW
    if isinstance(e, BinOp):
        if e.op == "^":
            left = format_expr(e.left, pname, _PREC_POW + 1)
            right = format_expr(e.right, pname, _PREC_POW)
            return f"{left}^{right}", _PREC_POW
        if e.op in "+-":
            left = format_expr(e.left, pname, _PREC_ADD)
            right = format_expr(e.right, pname, _PREC_ADD + 1)
            return f"{left} {e.op} {right}", _PREC_ADD
        left = format_expr(e.left, pname, _PREC_MUL)
        right = format_expr(e.right, pname, _PREC_MUL + 1)
        return f"{left}{e.op}{right}", _PREC_MUL
    raise TypeError(f"not an Expr node: {e!r}")


def format_curve(c: CurveDef) -> str:
    inner = ", ".join(format_expr(comp, c.parameter_name) for comp in c.components)
    return f"({inner})"


# --- evaluation ------------------------------------------------------------


def eval_expr(e: Expr, t: float) -> float:
    """Plain IEEE-754 evaluation of one expression at parameter value t."""
    try:
        return _eval(e, t)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise DomainError(str(exc), node=e, value=t) from exc


def _raise_domain(node: Expr, value: float, message: str):
    err = DomainError(message, node=node, value=value)
    raise err


def _eval(e: Expr, t: float) -> float:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Var):
        return t
    if isinstance(e, Const):
        return CONSTANTS[e.name]
    if isinstance(e, Neg):
        return -_eval(e.child, t)
    if isinstance(e, IntPow):
        base = _eval(e.base, t)
        try:
            return float(base**e.exponent)
        except ZeroDivisionError:
            _raise_domain(e, base, "zero raised to a negative power")
    if isinstance(e, Call):
        arg = _eval(e.arg, t)
        if e.func == "sqrt":
            if arg < 0:
                _raise_domain(e, arg, f"sqrt of negative value {arg!r}")
            return math.sqrt(arg)
        if e.func == "log":
            if arg <= 0:
                _raise_domain(e, arg, f"log of non-positive value {arg!r}")
            return math.log(arg)
        if e.func == "exp":
            try:
                return math.exp(arg)
            except OverflowError:
                _raise_domain(e, arg, "exp overflow")
        if e.func == "abs":
            return abs(arg)
        return getattr(math, e.func)(arg)
    if isinstance(e, BinOp):
        a = _eval(e.left, t)
        b = _eval(e.right, t)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        if e.op == "/":
            if b == 0.0:
                _raise_domain(e, b, "division by zero")
            return a / b
        # general power: defined for positive base only
        if a <= 0.0:
            _raise_domain(e, a, f"power with non-positive base {a!r}")
        return math.exp(b * math.log(a))
    raise TypeError(f"not an Expr node: {e!r}")


def eval_curve(c: CurveDef, t: float) -> np.ndarray:
    """Evaluate all three components at t; returns shape (3,)."""
    return np.array([eval_expr(comp, t) for comp in c.components])
