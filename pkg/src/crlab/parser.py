"""Recursive-descent parser for the polynomial expression language.

Grammar (whitespace insensitive)::

    poly     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ['^' nat]
    atom     := rational | 'i' | var | '(' poly ')'
    rational := int ['/' nat]
    var      := identifier | '~' identifier

``~z`` is the zeta-partner of the holomorphic variable ``z``; ``i`` is the
imaginary unit.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .core.numbers import I
from .core.poly import Poly
from .errors import ParseError

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<ident>~?[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


def tokenize(text, line=None, col_offset=0):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col_offset + pos + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), col_offset + pos + 1))
        pos = m.end()
    tokens.append(("end", "", col_offset + len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, table, line, col_offset):
        self.tokens = tokenize(text, line, col_offset)
        self.pos = 0
        self.table = table
        self.line = line

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.line, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise self.error(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok)
        return tok

    def parse(self):
        result = self.poly()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")
        return result

    def poly(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.peek()[1] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be a natural number", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, text, _ = tok
        if kind == "num":
            value = Fraction(int(text))
            if self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    raise self.error("denominator must be a natural number", den)
                if int(den[1]) == 0:
                    raise self.error("zero denominator", den)
                value = value / int(den[1])
            return Poly.constant(self.table, value)
        if kind == "ident":
            if text == "i":
                return Poly.constant(self.table, I)
            if text not in self.table:
                raise self.error(f"undeclared variable {text!r}", tok)
            return Poly.var(self.table, text)
        if text == "(":
            inner = self.poly()
            self.expect(")")
            return inner
        raise self.error(f"unexpected {text or 'end of input'!r}", tok)


def parse_poly(text, table, *, line=None, column=1):
    """Parse ``text`` into a :class:`Poly` on ``table``."""
    return _Parser(text, table, line, column - 1).parse()


def parse_poly_list(text, table, *, line=None, column=1, sep=";"):
    """Parse ``p1; p2; ...`` (empty pieces are skipped)."""
    out = []
    offset = column - 1
    for piece in text.split(sep):
        stripped = piece.strip()
        if stripped:
            lead = len(piece) - len(piece.lstrip())
            out.append(parse_poly(stripped, table, line=line, column=offset + lead + 1))
        offset += len(piece) + len(sep)
    return out
