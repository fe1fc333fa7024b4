"""Text form of polynomials.

Grammar (whitespace insignificant, '*' optional between factors, a single
unary minus allowed at the head of an expression or right after '('):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := uint | var ('^' uint)? | '(' expr ')'
    var    := [a-zA-Z][a-zA-Z0-9]*
"""

from __future__ import annotations

import re

from .poly import Polynomial, PolyRing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[a-zA-Z][a-zA-Z0-9]*)|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        i = 0
        while i < len(text):
            m = _TOKEN.match(text, i)
            if m is None:
                bad = text[i:].lstrip()
                if not bad:
                    break
                at = len(text) - len(bad)
                raise ParseError(f"unexpected character {bad[0]!r}", at)
            for kind in ("num", "name", "op"):
                if m.group(kind) is not None:
                    self.items.append((kind, m.group(kind), m.start(kind)))
            i = m.end()
        self.items.append(("end", "", len(text)))
        self.k = 0

    def peek(self) -> tuple[str, str, int]:
        return self.items[self.k]

    def next(self) -> tuple[str, str, int]:
        t = self.items[self.k]
        self.k += 1
        return t


def parse(text: str, ring: PolyRing) -> Polynomial:
    toks = _Tokens(text)
    result = _expr(toks, ring)
    kind, val, pos = toks.peek()
    if kind != "end":
        raise ParseError(f"trailing input {val!r}", pos)
    return result


def _expr(toks: _Tokens, ring: PolyRing) -> Polynomial:
    kind, val, _ = toks.peek()
    negate = False
    if kind == "op" and val == "-":
        toks.next()
        negate = True
    acc = _term(toks, ring)
    if negate:
        acc = -acc
    while True:
        kind, val, _ = toks.peek()
        if kind == "op" and val in "+-":
            toks.next()
            rhs = _term(toks, ring)
            acc = acc + rhs if val == "+" else acc - rhs
        else:
            return acc


def _term(toks: _Tokens, ring: PolyRing) -> Polynomial:
    acc = _factor(toks, ring)
    while True:
        kind, val, _ = toks.peek()
        if kind == "op" and val == "*":
            toks.next()
            acc = acc * _factor(toks, ring)
        elif kind in ("num", "name") or (kind == "op" and val == "("):
            acc = acc * _factor(toks, ring)
        else:
            return acc


def _factor(toks: _Tokens, ring: PolyRing) -> Polynomial:
    kind, val, pos = toks.next()
    if kind == "num":
        return ring.constant(int(val))
    if kind == "name":
        if val not in ring.variables:
            raise ParseError(f"unknown variable {val!r}", pos)
        base = ring.var(val)
        kind2, val2, _ = toks.peek()
        if kind2 == "op" and val2 == "^":
            toks.next()
            kind3, val3, pos3 = toks.next()
            if kind3 != "num":
                raise ParseError("exponent must be a nonnegative integer", pos3)
            return base ** int(val3)
        return base
    if kind == "op" and val == "(":
        inner = _expr(toks, ring)
        kind2, val2, pos2 = toks.next()
        if not (kind2 == "op" and val2 == ")"):
            raise ParseError("expected ')'", pos2)
        return inner
    raise ParseError(f"expected a factor, found {val!r}" if val else "unexpected end of input", pos)
