"""Parsing and rendering of series literals.

Accepted input (whitespace-insensitive)::

    sum    := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" integer)?
    atom   := "x" | "g" | "a0" | digits | "(" sum ")"

``x`` is the uniformizer, ``g`` the generator of F_q over F_2, ``a0`` the
fixed trace-one constant, and a digit string n stands for n mod 2.  Only
``x`` may carry a negative exponent.  This is a superset of the documented
series grammar, with ordinary precedence resolving ``g^2+g*x`` as
``g^2 + (g*x)``.

Rendering emits terms in increasing exponent order, joined by `` + ``;
multi-term coefficients on non-constant terms are parenthesized so output
parses back to the same series.
"""

from __future__ import annotations

import re

from .errors import ParseError, UnknownSymbol
from .gf2f import FieldCtx, FqElem, render_poly
from .laurent import DEFAULT_PREC, LaurentSeries

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()]))")

# A Laurent polynomial over F_q: {exponent of x: coefficient bits}.
Poly = dict


class _Parser:
    def __init__(self, text: str, ctx: FieldCtx) -> None:
        self.ctx = ctx
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                pos += len(text[pos:]) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        out = self.sum()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return out

    def sum(self) -> Poly:
        acc = self.term()
        while self.peek()[1] in ("+", "-"):
            self.take()
            acc = _padd(acc, self.term())
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek()[1] == "*":
            self.take()
            acc = _pmul(self.ctx, acc, self.factor())
        return acc

    def integer(self) -> int:
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, v, pos = self.take()
        if kind != "num":
            raise ParseError(f"expected an integer exponent, found {v or 'end of input'!r}", pos)
        return sign * int(v)

    def factor(self) -> Poly:
        base, is_x = self.atom()
        if self.peek()[1] != "^":
            return base
        self.take()
        epos = self.peek()[2]
        e = self.integer()
        if is_x:
            return {e: 1}
        if e < 0:
            raise ParseError("negative exponent allowed only on x", epos)
        out: Poly = {0: 1}
        for _ in range(e):
            out = _pmul(self.ctx, out, base)
        return out

    def atom(self) -> tuple[Poly, bool]:
        kind, v, pos = self.take()
        if kind == "num":
            return ({0: 1} if int(v) % 2 else {}), False
        if kind == "name":
            if v == "x":
                return {1: 1}, True
            if v == "g":
                return _const(self.ctx.reduce(0b10)), False
            if v == "a0":
                return _const(self.ctx.a0), False
            raise UnknownSymbol(f"unknown symbol {v!r}", pos)
        if v == "(":
            inner = self.sum()
            self.expect(")")
            return inner, False
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def _const(c: int) -> Poly:
    return {0: c} if c else {}


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) ^ c
        if not out[e]:
            del out[e]
    return out


def _pmul(ctx: FieldCtx, a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            out[e] = out.get(e, 0) ^ ctx.mul(ca, cb)
    return {e: c for e, c in out.items() if c}


def parse_terms(text: str, ctx: FieldCtx) -> dict[int, int]:
    """Parse to an exact Laurent polynomial ``{exponent: coefficient bits}``."""
    return _Parser(text, ctx).parse()


def ls_parse(text: str, ctx: FieldCtx, prec: int = DEFAULT_PREC) -> LaurentSeries:
    """Parse a series literal; the literal is exact, so prec covers every written term."""
    terms = parse_terms(text, ctx)
    top = max(terms, default=-1)
    return LaurentSeries.from_terms(ctx, terms, max(prec, top + 1))


def parse_fq(text: str, ctx: FieldCtx) -> FqElem:
    terms = parse_terms(text, ctx)
    if any(e != 0 for e in terms):
        raise ParseError(f"{text!r} is not a constant", 0)
    return FqElem(ctx, terms.get(0, 0))


def render_term(exponent: int, coeff: int) -> str:
    c = render_poly(coeff)
    if exponent == 0:
        return c
    power = "x" if exponent == 1 else f"x^{exponent}"
    if coeff == 1:
        return power
    if "+" in c:
        c = f"({c})"
    return f"{c}*{power}"


def render_terms(terms: dict[int, int]) -> str:
    items = [(e, c) for e, c in sorted(terms.items()) if c]
    if not items:
        return "0"
    return " + ".join(render_term(e, c) for e, c in items)


def ls_render(a: LaurentSeries) -> str:
    return render_terms(a.terms())
