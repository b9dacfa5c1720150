"""Expression parser for field and series inputs.

Grammar (standard precedence, left-associative):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' NUM)*
    atom   := NUM | IDENT | '(' expr ')' | ('exp' | 'log') '(' expr ')'

NUM is a non-negative integer literal; rationals are written p/q.
Exponents must be literal non-negative integers.  Variables are t and
x1, x2, ...; anything else is rejected when evaluated.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .field import RationalFunction
from .series import Series, ser_exp, ser_log

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([()+\-*/^]))")
_XVAR = re.compile(r"^x([1-9][0-9]*)$")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        if m.group(1):
            tokens.append(("NUM", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("IDENT", m.group(2), m.start(2)))
        else:
            tokens.append((m.group(3), m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("END", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.advance()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        e = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return e

    def expr(self):
        e = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            e = ("add" if op == "+" else "sub", e, rhs)
        return e

    def term(self):
        e = self.unary()
        while self.peek()[0] in ("*", "/"):
            tok = self.advance()
            rhs = self.unary()
            e = ("mul", e, rhs) if tok[0] == "*" else ("div", e, rhs, tok[2])
        return e

    def unary(self):
        if self.peek()[0] == "-":
            self.advance()
            return ("neg", self.unary())
        return self.power()

    def power(self):
        e = self.atom()
        while self.peek()[0] == "^":
            tok = self.advance()
            exp = self.peek()
            if exp[0] != "NUM":
                raise ParseError(
                    "exponent must be a non-negative integer literal", exp[2]
                )
            self.advance()
            e = ("pow", e, exp[1], tok[2])
        return e

    def atom(self):
        tok = self.advance()
        if tok[0] == "NUM":
            return ("int", tok[1])
        if tok[0] == "IDENT":
            if tok[1] in ("exp", "log") and self.peek()[0] == "(":
                self.advance()
                arg = self.expr()
                self.expect(")")
                return ("call", tok[1], arg, tok[2])
            return ("var", tok[1], tok[2])
        if tok[0] == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])


def parse(text: str):
    return _Parser(text).parse()


def collect_vars(ast) -> set:
    """Indices of x-variables appearing in the tree."""
    out: set = set()
    _walk_vars(ast, out)
    return out


def _walk_vars(ast, out: set) -> None:
    kind = ast[0]
    if kind == "var":
        m = _XVAR.match(ast[1])
        if m:
            out.add(int(m.group(1)))
    elif kind in ("neg",):
        _walk_vars(ast[1], out)
    elif kind in ("add", "sub", "mul", "div"):
        _walk_vars(ast[1], out)
        _walk_vars(ast[2], out)
    elif kind == "pow":
        _walk_vars(ast[1], out)
    elif kind == "call":
        _walk_vars(ast[2], out)


def _resolve_x(name: str, pos: int, r: int) -> int:
    m = _XVAR.match(name)
    if not m:
        raise ParseError(f"unknown identifier {name!r}", pos)
    j = int(m.group(1))
    if j > r:
        raise ParseError(f"variable {name} exceeds the declared count r={r}", pos)
    return j


def eval_field(ast, r: int) -> RationalFunction:
    kind = ast[0]
    if kind == "int":
        return RationalFunction.const(r, ast[1])
    if kind == "var":
        if ast[1] == "t":
            raise ParseError("t is not a field element", ast[2])
        return RationalFunction.variable(r, _resolve_x(ast[1], ast[2], r))
    if kind == "neg":
        return -eval_field(ast[1], r)
    if kind == "add":
        return eval_field(ast[1], r) + eval_field(ast[2], r)
    if kind == "sub":
        return eval_field(ast[1], r) - eval_field(ast[2], r)
    if kind == "mul":
        return eval_field(ast[1], r) * eval_field(ast[2], r)
    if kind == "div":
        return eval_field(ast[1], r) / eval_field(ast[2], r)
    if kind == "pow":
        base = eval_field(ast[1], r)
        out = RationalFunction.one(r)
        for _ in range(ast[2]):
            out = out * base
        return out
    if kind == "call":
        raise ParseError(f"{ast[1]} is only defined on series", ast[3])
    raise ParseError(f"malformed expression node {kind!r}")


def eval_series(ast, r: int, M: int) -> Series:
    kind = ast[0]
    if kind == "int":
        return Series.const(r, M, ast[1])
    if kind == "var":
        if ast[1] == "t":
            return Series.t(r, M)
        j = _resolve_x(ast[1], ast[2], r)
        return Series.const(r, M, RationalFunction.variable(r, j))
    if kind == "neg":
        return -eval_series(ast[1], r, M)
    if kind == "add":
        return eval_series(ast[1], r, M) + eval_series(ast[2], r, M)
    if kind == "sub":
        return eval_series(ast[1], r, M) - eval_series(ast[2], r, M)
    if kind == "mul":
        return eval_series(ast[1], r, M) * eval_series(ast[2], r, M)
    if kind == "div":
        return eval_series(ast[1], r, M) / eval_series(ast[2], r, M)
    if kind == "pow":
        base = eval_series(ast[1], r, M)
        out = Series.const(r, M, 1)
        for _ in range(ast[2]):
            out = out * base
        return out
    if kind == "call":
        arg = eval_series(ast[2], r, M)
        return ser_exp(arg) if ast[1] == "exp" else ser_log(arg)
    raise ParseError(f"malformed expression node {kind!r}")


def parse_field(text: str, r: int) -> RationalFunction:
    return eval_field(parse(text), r)


def parse_series(text: str, r: int, M: int) -> Series:
    return eval_series(parse(text), r, M)


def infer_var_count(texts) -> int:
    """Smallest r covering every x-variable mentioned; at least 1."""
    r = 1
    for text in texts:
        found = collect_vars(parse(text))
        if found:
            r = max(r, max(found))
    return r
