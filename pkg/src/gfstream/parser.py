"""Recursive-descent parser for generating-function expressions.

Grammar (whitespace ignored)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' uint)*
    atom    := 'sqrt' '(' expr ')' | '(' expr ')' | uint | 'x'

``3/8`` parses as a division of integers, which is the same rational.  The
expression is compiled to a tree first and evaluated at a working order; when
divisions by powers of ``x`` eat into the order, evaluation is repeated with
more slack until the requested order is reached.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from gfstream.series import Poly, Series, SeriesError, divide, sqrt

__all__ = ["ParseError", "parse", "compile_expr"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|(x)|([-+*/^()]))")
_MAX_SLACK = 256
_MAX_EXPONENT = 4096


class ParseError(ValueError):
    """Syntax error at character ``pos`` of the source text."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


@dataclass(frozen=True)
class Node:
    op: str
    args: tuple = ()
    value: Fraction | int | None = None


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), start))
        elif m.group(2):
            toks.append(("sqrt", "sqrt", start))
        elif m.group(3):
            toks.append(("x", "x", start))
        else:
            toks.append((m.group(4), m.group(4), start))
        pos = m.end()
    toks.append(("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "end of input" if kind == "eof" else repr(kind)
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {want}, found {got}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> Node:
        node = self.term()
        while self.peek() in "+-":
            op = self.take(self.peek())[0]
            node = Node(op, (node, self.term()))
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take(self.peek())[0]
            node = Node(op, (node, self.unary()))
        return node

    def unary(self) -> Node:
        if self.peek() == "-":
            self.take("-")
            return Node("neg", (self.unary(),))
        if self.peek() == "+":
            self.take("+")
            return self.unary()
        return self.power()

    def power(self) -> Node:
        node = self.atom()
        while self.peek() == "^":
            self.take("^")
            exp = self.take("int")
            if int(exp[1]) > _MAX_EXPONENT:
                raise ParseError(f"exponent above {_MAX_EXPONENT}", self.text, exp[2])
            node = Node("^", (node,), int(exp[1]))
        return node

    def atom(self) -> Node:
        kind, val, pos = self.toks[self.i]
        if kind == "int":
            self.i += 1
            return Node("const", (), Fraction(int(val)))
        if kind == "x":
            self.i += 1
            return Node("x")
        if kind == "sqrt":
            self.i += 1
            self.take("(")
            inner = self.expr()
            self.take(")")
            return Node("sqrt", (inner,))
        if kind == "(":
            self.i += 1
            inner = self.expr()
            self.take(")")
            return inner
        found = "end of input" if kind == "eof" else repr(val)
        raise ParseError(f"expected a number, 'x', 'sqrt' or '(', found {found}", self.text, pos)


def compile_expr(text: str) -> Node:
    p = _Parser(text)
    node = p.expr()
    p.take("eof")
    return node


class _NeedMoreOrder(Exception):
    pass


def _eval(node: Node, order: int) -> Series:
    op = node.op
    if op == "const":
        return Series.from_poly(Poly([node.value]), order)
    if op == "x":
        return Series.x(order)
    if op == "neg":
        return -_eval(node.args[0], order)
    if op == "sqrt":
        return sqrt(_eval(node.args[0], order))
    if op == "^":
        return _eval(node.args[0], order) ** node.value
    left = _eval(node.args[0], order)
    right = _eval(node.args[1], order)
    if op == "+":
        return left + right
    if op == "-":
        return left - right
    if op == "*":
        return left * right
    if right.valuation() is None:
        raise _NeedMoreOrder
    k = right.valuation()
    if k > left.order:
        raise _NeedMoreOrder
    return divide(left, right)


def parse(text: str, order: int) -> Series:
    """Evaluate ``text`` as a power series through ``x^order``.

    Raises :class:`ParseError` for syntax errors and
    :class:`~gfstream.series.SeriesError` for undefined operations.
    """
    if order < 0:
        raise SeriesError("order must be non-negative")
    tree = compile_expr(text)
    slack = 0
    while True:
        try:
            f = _eval(tree, order + slack)
        except _NeedMoreOrder:
            f = None
        if f is not None and f.order >= order:
            return f.truncate(order)
        lost = order - (f.order if f is not None else 0)
        slack = max(slack + 1, slack + lost) if f is not None else max(2 * slack, slack + 4)
        if slack > _MAX_SLACK:
            raise SeriesError("divisor vanishes to every order tried; not invertible")
