"""Recursive-descent parser for rational-function expressions in ``t``.

Grammar::

    expr  := term (("+" | "-") term)*
    term  := unary (("*" | "/") unary)*
    unary := "-" unary | power
    power := atom ("^" exponent)?
    atom  := integer | "t" | ident | "(" expr ")"

``exponent`` is an integer, optionally signed and optionally parenthesised.
Identifiers must be bound to rationals by the caller. There is no implicit
multiplication.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Optional

from .algebra import RatFunc


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        self.message = message
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at byte {offset}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            if m.group(1) is not None:
                self.items.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.items.append(("ident", m.group(2), m.start(2)))
            elif m.group(3) is not None:
                ch = m.group(3)
                if ch not in "+-*/^()":
                    raise ParseError(f"unexpected character {ch!r}", self._byte(m.start(3)), text)
                self.items.append(("op", ch, m.start(3)))
            pos = m.end()
            if pos >= len(text):
                break
        self.items.append(("end", "", len(text)))
        self.i = 0

    def _byte(self, idx: int) -> int:
        return len(self.text[:idx].encode("utf-8"))

    def peek(self):
        return self.items[self.i]

    def next(self):
        tok = self.items[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None) -> ParseError:
        tok = tok or self.peek()
        return ParseError(message, self._byte(tok[2]), self.text)


class _Parser:
    def __init__(self, text: str, params: Mapping[str, Fraction]):
        self.toks = _Tokens(text)
        self.params = params

    def parse(self) -> RatFunc:
        value = self.expr()
        tok = self.toks.peek()
        if tok[0] != "end":
            raise self.toks.error(f"unexpected {tok[1]!r}")
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.toks.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.toks.next()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.unary()
        while self.toks.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.toks.next()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise self.toks.error("division by the zero function", tok)
                value = value / rhs
        return value

    def unary(self) -> RatFunc:
        if self.toks.peek()[:2] == ("op", "-"):
            self.toks.next()
            return -self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.toks.peek()[:2] != ("op", "^"):
            return base
        caret = self.toks.next()
        n = self.exponent()
        if n < 0 and base.is_zero:
            raise self.toks.error("division by the zero function", caret)
        return base ** n

    def exponent(self) -> int:
        tok = self.toks.peek()
        paren = tok[:2] == ("op", "(")
        if paren:
            self.toks.next()
        sign = 1
        if self.toks.peek()[:2] == ("op", "-"):
            self.toks.next()
            sign = -1
        tok = self.toks.next()
        if tok[0] != "int":
            raise self.toks.error("non-integer exponent", tok)
        if paren:
            close = self.toks.next()
            if close[:2] != ("op", ")"):
                raise self.toks.error("non-integer exponent", close)
        return sign * int(tok[1])

    def atom(self) -> RatFunc:
        tok = self.toks.next()
        kind, text = tok[0], tok[1]
        if kind == "int":
            return RatFunc(int(text))
        if kind == "ident":
            if text == "t":
                return RatFunc.t()
            if text in self.params:
                return RatFunc(Fraction(self.params[text]))
            raise self.toks.error(f"unknown identifier {text!r}", tok)
        if (kind, text) == ("op", "("):
            value = self.expr()
            close = self.toks.next()
            if close[:2] != ("op", ")"):
                raise self.toks.error("expected ')'", close)
            return value
        if kind == "end":
            raise self.toks.error("unexpected end of input", tok)
        raise self.toks.error(f"unexpected {text!r}", tok)


def parse_expr(text: str, params: Optional[Mapping[str, Fraction]] = None) -> RatFunc:
    """Parse ``text`` into an exact rational function of ``t``."""
    return _Parser(text, params or {}).parse()


def parse_rational(text: str) -> Fraction:
    """A signed rational literal ``[-]n[/m]``."""
    m = re.fullmatch(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*", text)
    if not m:
        raise ParseError(f"expected a rational, got {text.strip()!r}", 0, text)
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError("zero denominator", 0, text)
    return Fraction(int(m.group(1)), den)
