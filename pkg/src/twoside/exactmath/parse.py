"""A small expression parser for relations and rational functions.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | unary)*     # juxtaposition multiplies
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | VAR | '(' expr ')'

NUMBER is an integer or decimal literal; ``3/4`` parses as a quotient.
"""

import re
from fractions import Fraction

from .bipoly import BiPoly
from .poly import Poly
from .ratfunc import RatFunc

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([A-Za-z_]\w*)|(\*\*|[-+*/^()]))")


class ParseError(ValueError):
    pass


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} at position {pos}")
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", Fraction(num)))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, variables, lift, divide):
        self.toks = tokens
        self.i = 0
        self.variables = variables
        self.lift = lift
        self.divide = divide

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input at token {self.i}")
        return v

    def expr(self):
        v = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                v = v + rhs if val == "+" else v - rhs
            else:
                return v

    def term(self):
        v = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                v = v * rhs if val == "*" else self.divide(v, rhs)
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                v = v * self.unary()
            else:
                return v

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            v = self.unary()
            return -v if val == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "-":
                self.take()
                sign = -1
            k3, e = self.take()
            if k3 != "num" or e.denominator != 1:
                raise ParseError("exponent must be an integer literal")
            e = int(e) * sign
            if e < 0:
                return self.divide(self.lift(1), base ** (-e))
            return base ** e
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.lift(val)
        if kind == "var":
            if val not in self.variables:
                raise ParseError(f"unknown variable {val!r} (allowed: {', '.join(self.variables)})")
            return self.variables[val]
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError("unexpected end of expression" if kind is None else f"unexpected {val!r}")


def _bipoly_divide(a, b):
    if not b:
        raise ParseError("division by zero")
    if set(b.terms) - {(0, 0)}:
        raise ParseError("relations may only be divided by constants")
    c = b.terms[(0, 0)]
    return a * BiPoly.const(1 / c)


def parse_bipoly(text):
    """Parse a polynomial in ``x`` and ``y`` with rational coefficients."""
    toks = _tokenize(text)
    p = _Parser(toks, {"x": BiPoly.x(), "y": BiPoly.y()}, BiPoly.const, _bipoly_divide)
    return p.parse()


def parse_ratfunc(text, var="t"):
    """Parse an element of Q(t)."""
    toks = _tokenize(text)
    gen = RatFunc.from_poly(Poly((0, 1)))

    def div(a, b):
        if not b:
            raise ParseError("division by zero")
        return a / b

    p = _Parser(toks, {var: gen}, lambda c: RatFunc(Fraction(c)), div)
    return p.parse()
