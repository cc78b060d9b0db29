"""Parser for one-variable polynomial text such as ``2x^2 - 1/3x + 5``.

Grammar (whitespace allowed between tokens)::

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := coeff | coeff? 'x' ('^' uint)?
    coeff := uint | uint '/' uint

A missing coefficient or exponent means 1.  Repeated powers are summed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .errors import PolynomialSyntaxError
from .exact_core import Polynomial, format_polynomial

_TOKEN_RE = re.compile(r"[0-9]+|[x/^+\-]")


class Token(NamedTuple):
    kind: str  # "int", "x", "/", "^", "+", "-", "end"
    text: str
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos + 1)
        kind = "int" if m.group().isdigit() else m.group()
        tokens.append(Token(kind, m.group(), pos + 1))
        pos = m.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise PolynomialSyntaxError(f"expected {kind!r}, found {found}", tok.column)
        self.i += 1
        return tok

    def expr(self) -> dict:
        terms: dict = {}
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1
        while True:
            coeff, power = self.term()
            terms[power] = terms.get(power, Fraction(0)) + sign * coeff
            if self.tok.kind == "end":
                return terms
            if self.tok.kind not in ("+", "-"):
                raise PolynomialSyntaxError(
                    f"expected '+', '-' or end of input, found {self.tok.text!r}",
                    self.tok.column)
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1

    def term(self):
        tok = self.tok
        if tok.kind == "int":
            coeff = Fraction(int(self.take("int").text))
            if self.tok.kind == "/":
                self.take("/")
                den = self.take("int")
                if int(den.text) == 0:
                    raise PolynomialSyntaxError("zero denominator", den.column)
                coeff /= int(den.text)
            if self.tok.kind != "x":
                return coeff, 0
        elif tok.kind == "x":
            coeff = Fraction(1)
        else:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise PolynomialSyntaxError(f"expected a term, found {found}", tok.column)
        self.take("x")
        power = 1
        if self.tok.kind == "^":
            self.take("^")
            power = int(self.take("int").text)
        return coeff, power


def parse_polynomial(text: str) -> Polynomial:
    """Parse polynomial text into canonical form.

    Raises :class:`PolynomialSyntaxError` (with a 1-based column) on bad input.
    """
    if not text or not text.strip():
        raise PolynomialSyntaxError("empty input", 1)
    terms = _Parser(text).expr()
    top = max(terms)
    return Polynomial(terms.get(k, 0) for k in range(top, -1, -1))


def print_polynomial(p: Polynomial) -> str:
    return format_polynomial(p)
