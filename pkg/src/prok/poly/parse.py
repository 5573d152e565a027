"""Tokenizer and expression parser for polynomial text such as
``3*x^2*y - 1/2*y + 7``.

Expressions parse to nested tuples::

    ("num", int) | ("var", name) | ("neg", e) | ("pow", e, int)
    | ("add", a, b) | ("sub", a, b) | ("mul", a, b) | ("div", a, b)

Tuples compare structurally, which the DSL round-trip test relies on.
"""

import re
from dataclasses import dataclass

from ..errors import ProkError


class ParseError(ProkError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = "end-of-input" if line is None else f"line {line}, column {col}"
        super().__init__(f"syntax error at {where}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str  # num, ident, op, eof
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:-[A-Za-z][A-Za-z0-9_]*)*)
  | (?P<op>->|[-+*/^(),;=:\[\]{}<>.])
    """,
    re.VERBOSE,
)


def tokenize(text, keywords=()):
    """Split ``text`` into tokens with 1-based line/column positions.

    Hyphenated words (``artin-rees``, ``tor-depth``) stay one token only when
    listed in ``keywords``; anywhere else the hyphen is subtraction.
    """
    tokens = []
    pos = 0
    line, col = 1, 1
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        s = m.group()
        if kind == "ident" and "-" in s and s not in keywords:
            s = s.split("-", 1)[0]
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, s, line, col))
        for ch in s:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos += len(s)
    tokens.append(Token("eof", "", None, None))
    return tokens


class TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self, k=0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def at(self, text):
        t = self.peek()
        return t.kind in ("op", "ident") and t.text == text

    def accept(self, text):
        if self.at(text):
            return self.next()
        return None

    def expect(self, text):
        t = self.peek()
        if not self.at(text):
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {text!r}, found {found}", t.line, t.col)
        return self.next()

    def expect_kind(self, kind, what=None):
        t = self.peek()
        if t.kind != kind:
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {what or kind}, found {found}", t.line, t.col)
        return self.next()

    def error(self, message):
        t = self.peek()
        raise ParseError(message, t.line, t.col)


# expression grammar ---------------------------------------------------------
#   expr   := term (('+'|'-') term)*
#   term   := unary (('*'|'/') unary)*
#   unary  := '-' unary | '+' unary | power
#   power  := atom ('^' INT)?
#   atom   := INT | IDENT | '(' expr ')'


def parse_expr(ts):
    left = _parse_term(ts)
    while ts.at("+") or ts.at("-"):
        op = ts.next().text
        right = _parse_term(ts)
        left = ("add" if op == "+" else "sub", left, right)
    return left


def _parse_term(ts):
    left = _parse_unary(ts)
    while ts.at("*") or ts.at("/"):
        op = ts.next().text
        right = _parse_unary(ts)
        left = ("mul" if op == "*" else "div", left, right)
    return left


def _parse_unary(ts):
    if ts.accept("-"):
        return ("neg", _parse_unary(ts))
    if ts.accept("+"):
        return _parse_unary(ts)
    return _parse_power(ts)


def _parse_power(ts):
    base = _parse_atom(ts)
    if ts.accept("^"):
        neg = bool(ts.accept("-"))
        t = ts.expect_kind("num", "an integer exponent")
        if neg:
            raise ParseError("negative exponents are not allowed", t.line, t.col)
        return ("pow", base, int(t.text))
    return base


def _parse_atom(ts):
    t = ts.peek()
    if t.kind == "num":
        ts.next()
        return ("num", int(t.text))
    if t.kind == "ident":
        ts.next()
        return ("var", t.text)
    if ts.accept("("):
        e = parse_expr(ts)
        ts.expect(")")
        return e
    found = "end of input" if t.kind == "eof" else repr(t.text)
    raise ParseError(f"expected a number, variable or '(', found {found}", t.line, t.col)


def parse_expression(text):
    ts = TokenStream(tokenize(text))
    e = parse_expr(ts)
    if ts.peek().kind != "eof":
        ts.error(f"unexpected {ts.peek().text!r}")
    return e


_PREC = {"add": 1, "sub": 1, "mul": 2, "div": 2, "neg": 3, "pow": 4, "num": 5, "var": 5}


def format_expr(e):
    """Inverse of ``parse_expr`` up to structural equality."""
    kind = e[0]
    if kind == "num":
        return str(e[1])
    if kind == "var":
        return e[1]
    if kind == "neg":
        inner = e[1]
        s = format_expr(inner)
        return "-" + (f"({s})" if _PREC[inner[0]] < 3 else s)
    if kind == "pow":
        inner = e[1]
        s = format_expr(inner)
        if _PREC[inner[0]] < 5:
            s = f"({s})"
        return f"{s}^{e[2]}"
    a, b = e[1], e[2]
    p = _PREC[kind]
    sa, sb = format_expr(a), format_expr(b)
    if _PREC[a[0]] < p:
        sa = f"({sa})"
    # left-associative: the right operand needs parentheses at equal precedence
    if _PREC[b[0]] <= p or b[0] == "neg":
        sb = f"({sb})"
    op = {"add": " + ", "sub": " - ", "mul": "*", "div": "/"}[kind]
    return sa + op + sb


def expr_variables(e, out=None):
    if out is None:
        out = []
    if e[0] == "var":
        if e[1] not in out:
            out.append(e[1])
    elif e[0] in ("neg", "pow"):
        expr_variables(e[1], out)
    elif e[0] != "num":
        expr_variables(e[1], out)
        expr_variables(e[2], out)
    return out
