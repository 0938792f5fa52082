"""Text syntax for scalars, polynomials and rational functions in config files.

The grammar is the usual infix one: ``+ - * / ^``, parentheses, integer
literals and the variables ``x`` and ``y``.  ``3/2*x^2*y - x + 1`` is a
typical bivariate entry.  Division is only allowed by constants, except for
rational-function entries where ``(x+1)/(x-2)`` is accepted.
"""

from __future__ import annotations

import re

from .errors import ValidationError
from .poly import BiPoly, Poly, RatFun, format_bipoly, format_poly, format_ratfun

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        elif op is not None and not op.isspace():
            if op not in "+-*/^()":
                raise ValidationError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, number, variables):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.number = number
        self.variables = variables

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValidationError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.tokens:
            raise ValidationError("empty expression")
        value = self.expr()
        if self.i != len(self.tokens):
            raise ValidationError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValidationError(f"exponent must be a nonnegative integer in {self.text!r}")
            return base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.number(val)
        if kind == "name":
            if val not in self.variables:
                raise ValidationError(f"unknown symbol {val!r} in {self.text!r}")
            return self.variables[val]
        if (kind, val) == ("op", "("):
            value = self.expr()
            self.expect(")")
            return value
        raise ValidationError(f"unexpected token in {self.text!r}")


def _text(value) -> str:
    if isinstance(value, (int,)):
        return str(value)
    if not isinstance(value, str):
        raise ValidationError(f"expected a string expression, got {value!r}")
    return value


def parse_scalar(text, K):
    if isinstance(text, int):
        return K(text)
    return _Parser(_text(text), lambda n: K(n), {}).parse()


def parse_poly(text, K, var: str = "x") -> Poly:
    value = _Parser(_text(text), lambda n: Poly.const(n, K), {var: Poly.x(K)}).parse()
    if isinstance(value, RatFun):
        if not value.is_polynomial():
            raise ValidationError(f"{text!r} is not a polynomial")
        value = value.num
    return value


def parse_ratfun(text, K, var: str = "x") -> RatFun:
    one = RatFun.const(1, K)
    value = _Parser(_text(text), lambda n: one * K(n), {var: RatFun.x(K)}).parse()
    return value


def parse_bipoly(text, K) -> BiPoly:
    return _Parser(
        _text(text), lambda n: BiPoly.const(n, K), {"x": BiPoly.x(K), "y": BiPoly.y(K)}
    ).parse()


def dump_poly(p: Poly, var: str = "x") -> str:
    return format_poly(p, var)


def dump_ratfun(r: RatFun) -> str:
    return format_ratfun(r)


def dump_bipoly(b: BiPoly) -> str:
    return format_bipoly(b)
