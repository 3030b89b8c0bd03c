"""Text syntax for monomials and ideals.

Grammar (whitespace ignored)::

    ideal  := mono ("," mono)*
    mono   := "1" | factor ("*" factor)*
    factor := var ("^" posint)?

A single pair of parentheses around the whole list is accepted, so
``"(x*y, y*z)"`` and ``"x*y, y*z"`` mean the same thing. Variables must be
declared by the ring. Generators are minimalized on parse.
"""

from __future__ import annotations

import re

from .core import Monomial, MonomialIdeal, Ring, from_exps
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[*^,()\-]))")


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", *_position(text, start))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, *_position(self.text, tok[2]))

    def expect_op(self, op):
        tok = self.take()
        if tok[:2] != ("op", op):
            self.fail(f"expected {op!r}, found {tok[1] or 'end of input'!r}", tok)

    def monomial(self):
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            if tok[1] != "1":
                self.fail(f"coefficients are not allowed, found {tok[1]!r}", tok)
            return (0,) * self.ring.n
        exps = [0] * self.ring.n
        while True:
            tok = self.take()
            if tok[0] != "name":
                self.fail(f"expected a variable, found {tok[1] or 'end of input'!r}", tok)
            if tok[1] not in self.ring.variables:
                self.fail(f"unknown variable {tok[1]!r}", tok)
            e = 1
            if self.peek()[:2] == ("op", "^"):
                self.take()
                num = self.take()
                if num[:2] == ("op", "-"):
                    self.fail("negative exponent", num)
                if num[0] != "num":
                    self.fail("expected a positive exponent", num)
                e = int(num[1])
                if e == 0:
                    self.fail("zero exponent is not allowed", num)
            exps[self.ring.variables.index(tok[1])] += e
            if self.peek()[:2] != ("op", "*"):
                return tuple(exps)
            self.take()

    def ideal(self):
        wrapped = self.peek()[:2] == ("op", "(")
        if wrapped:
            self.take()
        if self.peek()[0] == "end" or self.peek()[:2] == ("op", ")"):
            self.fail("empty generator list")
        gens = [self.monomial()]
        while self.peek()[:2] == ("op", ","):
            self.take()
            gens.append(self.monomial())
        if wrapped:
            self.expect_op(")")
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return gens


def parse_ideal(ring: Ring, text: str) -> MonomialIdeal:
    """Parse ``text`` into a canonical ideal of ``ring``."""
    return from_exps(ring, _Parser(ring, text).ideal())


def parse_monomial(ring: Ring, text: str) -> Monomial:
    p = _Parser(ring, text)
    exps = p.monomial()
    if p.peek()[0] != "end":
        p.fail(f"unexpected {p.peek()[1]!r}")
    return Monomial(ring, exps)
