"""Recursive-descent parser for exact scalar expressions.

Grammar (whitespace insignificant):

    expr   := term (("+"|"-") term)*
    term   := factor ("*" factor | "/" factor)*
    factor := base ("^" nonneg-int)?
    base   := integer | identifier | "(" expr ")" | "-" base

Identifiers match [A-Za-z][A-Za-z0-9_]* and must come from the declared
variable list.  Every parse yields a normalized RatFunc.
"""

from __future__ import annotations

import re
from typing import Iterable

from .scalars import CHARPOLY_VAR, MPoly, RatFunc, ScalarError, scalar

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


class ParseError(ScalarError):
    """Syntax error with a character position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                raise ParseError(f"unexpected character {stripped[0]!r}", pos)
            if m.lastgroup is not None:
                self.items.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        if self.i < len(self.items):
            return self.items[self.i]
        return ("eof", "", len(self.text))

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.i += 1
        return tok


class _Parser:
    def __init__(self, text: str, vars: tuple[str, ...]):
        self.toks = _Tokens(text)
        self.vars = vars

    def parse(self) -> RatFunc:
        value = self._expr()
        kind, text, pos = self.toks.peek()
        if kind != "eof":
            raise ParseError(f"unexpected {text!r}", pos)
        return value

    def _expr(self) -> RatFunc:
        value = self._term()
        while True:
            kind, text, _ = self.toks.peek()
            if kind == "op" and text in "+-":
                self.toks.next()
                rhs = self._term()
                value = value + rhs if text == "+" else value - rhs
            else:
                return value

    def _term(self) -> RatFunc:
        value = self._factor()
        while True:
            kind, text, pos = self.toks.peek()
            if kind == "op" and text in "*/":
                self.toks.next()
                rhs = self._factor()
                if text == "*":
                    value = value * rhs
                else:
                    if rhs.is_zero():
                        raise ParseError("division by zero", pos)
                    value = value / rhs
            else:
                return value

    def _factor(self) -> RatFunc:
        value = self._base()
        kind, text, _ = self.toks.peek()
        if kind == "op" and text == "^":
            self.toks.next()
            ekind, etext, epos = self.toks.next()
            if ekind != "int":
                raise ParseError("exponent must be a nonnegative integer", epos)
            value = value ** int(etext)
        return value

    def _base(self) -> RatFunc:
        kind, text, pos = self.toks.next()
        if kind == "int":
            return scalar(int(text), self.vars)
        if kind == "ident":
            if text == CHARPOLY_VAR:
                raise ParseError(f"{CHARPOLY_VAR} is reserved", pos)
            if text not in self.vars:
                raise ParseError(f"unknown identifier {text!r}", pos)
            return scalar(MPoly.variable(text).extend(self.vars))
        if kind == "op" and text == "(":
            value = self._expr()
            ckind, ctext, cpos = self.toks.next()
            if not (ckind == "op" and ctext == ")"):
                raise ParseError("expected ')'", cpos)
            return value
        if kind == "op" and text == "-":
            return -self._base()
        raise ParseError(f"unexpected {text!r}" if text else "unexpected end of input", pos)


def parse_scalar(text: str, vars: Iterable[str] = ()) -> RatFunc:
    """Parse an expression over the declared variables into a normalized RatFunc."""
    vs = tuple(sorted(set(vars)))
    if CHARPOLY_VAR in vs:
        raise ScalarError(f"{CHARPOLY_VAR} is reserved")
    return _Parser(text, vs).parse()
