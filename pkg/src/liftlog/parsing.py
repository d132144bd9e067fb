"""Parsers for the text formats.

Ideals::

    ring x, y; x^10, x^8*y, x*y^4, y^5

Monomial maps (source vars on the left, target monomials on the right)::

    y1 = x1; y2 = x1^2*x2

Graded derivations, as a sum of ``coef*monomial*d<var>`` terms::

    y1^2*dy2          3*x*dx - 3*y*dy
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import IdealSyntaxError, NegativeExponent, UnknownVariable
from .monomial import MonomialIdeal, RingContext

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[\^*,;=+\-∂()]))")


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                rest = text[pos:]
                if rest.strip():
                    bad = pos + (len(rest) - len(rest.lstrip()))
                    raise IdealSyntaxError(f"unexpected character {text[bad]!r}", text, bad)
                break
            kind = m.lastgroup
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise IdealSyntaxError(f"expected {value!r}, found {val!r}", self.text, pos)
        return pos

    def at_end(self):
        return self.i >= len(self.toks)

    def error(self, msg, cls=IdealSyntaxError):
        raise cls(msg, self.text, self.peek()[2])


def _parse_factor(lx, ctx, exps):
    kind, name, pos = lx.take()
    if kind != "name":
        raise IdealSyntaxError(f"expected a variable, found {name!r}", lx.text, pos)
    if name not in ctx.variable_names:
        raise UnknownVariable(f"unknown variable {name!r}", lx.text, pos)
    e = 1
    if lx.peek()[1] == "^":
        lx.take()
        kind, val, vpos = lx.peek()
        if val == "-":
            raise NegativeExponent("negative exponents are not allowed", lx.text, vpos)
        lx.take()
        if kind != "num" or "/" in val or int(val) < 1:
            raise IdealSyntaxError(f"expected a positive integer exponent, found {val!r}", lx.text, vpos)
        e = int(val)
    exps[ctx.index(name)] += e


def _parse_monomial(lx, ctx):
    exps = [0] * ctx.n
    kind, val, pos = lx.peek()
    if kind == "num" and val == "1":
        lx.take()
        return tuple(exps)
    _parse_factor(lx, ctx, exps)
    while lx.peek()[1] == "*":
        lx.take()
        _parse_factor(lx, ctx, exps)
    return tuple(exps)


def _parse_ring_header(lx):
    kind, val, pos = lx.take()
    if val != "ring":
        raise IdealSyntaxError("input must start with a ring header 'ring x, y;'", lx.text, pos)
    names = []
    while True:
        kind, val, pos = lx.take()
        if kind != "name":
            raise IdealSyntaxError(f"expected a variable name, found {val!r}", lx.text, pos)
        if val in names:
            raise IdealSyntaxError(f"variable {val!r} declared twice", lx.text, pos)
        names.append(val)
        sep = lx.take()
        if sep[1] == ";":
            break
        if sep[1] != ",":
            raise IdealSyntaxError(f"expected ',' or ';', found {sep[1]!r}", lx.text, sep[2])
    return RingContext(tuple(names))


def parse_ring_and_ideal(text: str):
    """Parse ``ring x, y; gen, gen, ...`` into (RingContext, MonomialIdeal)."""
    lx = _Lexer(text)
    ctx = _parse_ring_header(lx)
    if lx.peek()[1] == "0" and lx.i == len(lx.toks) - 1:
        lx.take()
        return ctx, MonomialIdeal.zero(ctx)
    gens = [_parse_monomial(lx, ctx)]
    while not lx.at_end():
        lx.expect(",")
        gens.append(_parse_monomial(lx, ctx))
    return ctx, MonomialIdeal(ctx, tuple(gens))


def parse_ideal(text: str, ctx: RingContext) -> MonomialIdeal:
    """Parse a bare generator list against an already declared ring."""
    lx = _Lexer(text)
    gens = [_parse_monomial(lx, ctx)]
    while not lx.at_end():
        lx.expect(",")
        gens.append(_parse_monomial(lx, ctx))
    return MonomialIdeal(ctx, tuple(gens))


def parse_monomial(text: str, ctx: RingContext):
    lx = _Lexer(text)
    mono = _parse_monomial(lx, ctx)
    if not lx.at_end():
        lx.error("trailing input after monomial")
    return mono


def parse_map(text: str):
    """Parse ``y1 = x1; y2 = x1^2*x2`` into (source names, target names, rows).

    Target variables are collected in order of first appearance unless the
    text starts with a ``ring x1, x2;`` header naming them explicitly.
    """
    lx = _Lexer(text)
    target = None
    if lx.peek()[1] == "ring":
        target = _parse_ring_header(lx)
    bindings = []
    while not lx.at_end():
        kind, name, pos = lx.take()
        if kind != "name":
            raise IdealSyntaxError(f"expected a source variable, found {name!r}", text, pos)
        lx.expect("=")
        factors = []
        while True:
            kind, var, vpos = lx.take()
            if kind != "name":
                raise IdealSyntaxError(f"expected a target variable, found {var!r}", text, vpos)
            e = 1
            if lx.peek()[1] == "^":
                lx.take()
                k2, val, epos = lx.peek()
                if val == "-":
                    raise NegativeExponent("negative exponents are not allowed", text, epos)
                lx.take()
                if k2 != "num" or "/" in val or int(val) < 1:
                    raise IdealSyntaxError(f"expected a positive integer exponent, found {val!r}", text, epos)
                e = int(val)
            factors.append((var, e, vpos))
            if lx.peek()[1] != "*":
                break
            lx.take()
        bindings.append((name, factors))
        if lx.peek()[1] == ";":
            lx.take()
    if target is None:
        seen = []
        for _, factors in bindings:
            for var, _, _ in factors:
                if var not in seen:
                    seen.append(var)
        target = RingContext(tuple(seen))
    source = RingContext(tuple(name for name, _ in bindings))
    rows = []
    for _, factors in bindings:
        row = [0] * target.n
        for var, e, pos in factors:
            if var not in target.variable_names:
                raise UnknownVariable(f"unknown target variable {var!r}", text, pos)
            row[target.index(var)] += e
        rows.append(tuple(row))
    return source, target, tuple(rows)


def parse_derivation(text: str, ctx: RingContext):
    """Parse a homogeneous derivation; returns (degree, coeffs)."""
    lx = _Lexer(text)
    terms = []
    sign = 1
    first = True
    while not lx.at_end():
        kind, val, pos = lx.peek()
        if val in "+-" and kind == "op":
            lx.take()
            sign = -1 if val == "-" else 1
        elif not first:
            lx.error("expected '+' or '-' between terms")
        first = False
        coef = Fraction(1)
        exps = [0] * ctx.n
        target = None
        while True:
            kind, val, pos = lx.take()
            if kind == "num":
                coef *= Fraction(val)
            elif val == "∂" or (kind == "name" and val.startswith("d") and val[1:] in ctx.variable_names
                                and val not in ctx.variable_names):
                var = lx.take()[1] if val == "∂" else val[1:]
                if var not in ctx.variable_names:
                    raise UnknownVariable(f"unknown variable {var!r}", text, pos)
                target = ctx.index(var)
            elif kind == "name":
                lx.i -= 1
                _parse_factor(lx, ctx, exps)
            else:
                raise IdealSyntaxError(f"unexpected token {val!r}", text, pos)
            nxt = lx.peek()[1]
            if nxt == "∂" and target is None:
                continue  # x∂x, the form the formatter prints
            if nxt != "*":
                break
            lx.take()
        if target is None:
            raise IdealSyntaxError("each term needs a d<var> factor", text, pos)
        terms.append((sign * coef, tuple(exps), target))
        sign = 1
    if not terms:
        raise IdealSyntaxError("empty derivation", text, 0)
    degrees = {tuple(e - int(i == t) for i, e in enumerate(exps)) for _, exps, t in terms}
    if len(degrees) != 1:
        raise IdealSyntaxError("derivation must be homogeneous (one multidegree)", text, 0)
    degree = degrees.pop()
    coeffs = [Fraction(0)] * ctx.n
    for c, _, t in terms:
        coeffs[t] += c
    return degree, tuple(coeffs)
