"""Parser for rational-function expressions in t.

Grammar (whitespace ignored):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INTEGER)?
    atom   := INTEGER | 't' | '(' expr ')'

Only integers appear as literals; decimals and other symbols are rejected
with the offending position.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import Polynomial
from .ratfunc import RationalFunction


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        start = m.start(1) if m.group(1) else m.start(2)
        if m.group(1):
            end = m.end(1)
            if end < len(text) and text[end] == ".":
                raise ParseError("decimal literals are not accepted", text, end)
            tokens.append(("int", m.group(1), start))
        else:
            ch = m.group(2)
            if ch not in "+-*/^()t":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self) -> str:
        return self.tokens[self.k][0]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.k]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", self.text, tok[2])
        self.k += 1
        return tok

    def fail(self, message: str):
        raise ParseError(message, self.text, self.tokens[self.k][2])

    def expr(self) -> RationalFunction:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RationalFunction:
        acc = self.unary()
        while self.peek() in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise ParseError("division by zero", self.text, pos)
                acc = acc / rhs
        return acc

    def unary(self) -> RationalFunction:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek() == "^":
            _, _, pos = self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            exp = int(self.take("int")[1]) * sign
            if exp < 0 and base.is_zero():
                raise ParseError("negative power of zero", self.text, pos)
            base = base ** exp
        return base

    def atom(self) -> RationalFunction:
        kind = self.peek()
        if kind == "int":
            return RationalFunction(Polynomial((Fraction(int(self.take()[1])),)))
        if kind == "t":
            self.take()
            return RationalFunction(Polynomial((0, 1)))
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected token {self.tokens[self.k][1]!r}")


def parse_rational_function(text: str) -> RationalFunction:
    p = _Parser(text)
    if p.peek() == "end":
        p.fail("empty expression")
    out = p.expr()
    if p.peek() != "end":
        p.fail(f"unexpected token {p.tokens[p.k][1]!r}")
    return out


_RATIONAL = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q'; decimals are refused."""
    m = _RATIONAL.fullmatch(text)
    if not m:
        bad = next((k for k, ch in enumerate(text) if ch == "."), None)
        if bad is not None:
            raise ParseError("decimal literals are not accepted", text, bad)
        raise ParseError("expected a rational number p or p/q", text, 0)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError("zero denominator", text, m.start(2))
    return Fraction(num, den)
