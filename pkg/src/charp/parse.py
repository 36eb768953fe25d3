"""Text grammar for rings, polynomials and ideal generator lists.

    ring  :=  "F_" INT "[" name ("," name)* "]" ( "/" "(" poly ("," poly)* ")" )?
    poly  :=  ["-"] term (("+" | "-") term)*
    term  :=  factor ("*" factor)*
    factor:=  base ("^" INT)?
    base  :=  name | INT | "(" poly ")"

Multiplication is always explicit (`y*z^3`, never `yz^3`), powers use `^`,
and printing round-trips through this grammar bit for bit.  The unicode
minus sign is accepted as a convenience alias for "-".
"""

from __future__ import annotations

import re

from .ring import Ring, is_prime


class ParseError(ValueError):
    """Syntax or semantic error in ring/polynomial text, with a position."""

    def __init__(self, message, text, pos):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.bare_message = message
        self.text = text
        self.pos = pos


_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<int>\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*^(),\[\]/]|−)"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character", text, pos)
        if m.lastgroup != "ws":
            kind = m.lastgroup
            value = m.group()
            if value == "−":
                value = "-"
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring=None):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.peek()
        if val != value:
            raise ParseError(f"expected {value!r}", self.text, pos)
        return self.next()

    def fail(self, message):
        raise ParseError(message, self.text, self.peek()[2])

    # polynomial grammar -------------------------------------------------

    def parse_poly(self):
        ring = self.ring
        negate = False
        if self.peek()[1] == "-":
            self.next()
            negate = True
        poly = self.parse_term()
        if negate:
            poly = -poly
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            term = self.parse_term()
            poly = poly + term if op == "+" else poly - term
        return poly

    def parse_term(self):
        poly = self.parse_factor()
        while self.peek()[1] == "*":
            self.next()
            poly = poly * self.parse_factor()
        return poly

    def parse_factor(self):
        base = self.parse_base()
        if self.peek()[1] == "^":
            self.next()
            kind, val, pos = self.peek()
            if val == "-":
                raise ParseError("negative exponent", self.text, pos)
            if kind != "int":
                raise ParseError("expected integer exponent", self.text, pos)
            self.next()
            base = base ** int(val)
        return base

    def parse_base(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.next()
            return self.ring.const(int(val))
        if kind == "name":
            self.next()
            try:
                return self.ring.var(val)
            except KeyError:
                raise ParseError(f"unknown variable {val!r}", self.text, pos) from None
        if val == "(":
            self.next()
            inner = self.parse_poly()
            self.expect(")")
            return inner
        if val == "-":
            self.next()
            return -self.parse_base()
        raise ParseError("expected a variable, number or parenthesized expression",
                         self.text, pos)

    def parse_poly_list(self):
        """Comma separated polynomials wrapped in parentheses."""
        self.expect("(")
        polys = []
        if self.peek()[1] != ")":
            polys.append(self.parse_poly())
            while self.peek()[1] == ",":
                self.next()
                polys.append(self.parse_poly())
        self.expect(")")
        return [g for g in polys if g]

    def at_end(self):
        return self.peek()[0] == "end"


def parse_poly(text, ring):
    p = _Parser(text, ring)
    poly = p.parse_poly()
    if not p.at_end():
        p.fail("trailing input after polynomial")
    return poly


def parse_poly_list(text, ring):
    """Parse an ideal generator list `(g1, g2, ...)`; zero generators are
    dropped, so "(0)" yields the empty list."""
    p = _Parser(text, ring)
    gens = p.parse_poly_list()
    if not p.at_end():
        p.fail("trailing input after generator list")
    return gens


def parse_ring(text):
    """Parse `F_<p>[v1,...,vn]` optionally followed by `/(g1,...,gk)`."""
    p = _Parser(text)
    kind, val, pos = p.peek()
    if kind != "name" or not re.fullmatch(r"F_\d+", val):
        raise ParseError("expected ring header F_<p>", text, pos)
    p.next()
    char = int(val[2:])
    if not is_prime(char):
        raise ParseError(f"{char} is not prime", text, pos)
    p.expect("[")
    names = []
    kind, val, pos = p.peek()
    if kind != "name":
        raise ParseError("expected a variable name", text, pos)
    names.append(p.next()[1])
    while p.peek()[1] == ",":
        p.next()
        kind, val, pos = p.peek()
        if kind != "name":
            raise ParseError("expected a variable name", text, pos)
        names.append(p.next()[1])
    if len(set(names)) != len(names):
        raise ParseError(f"duplicate variables {names}", text, pos)
    p.expect("]")
    ring = Ring(char, names)
    if p.peek()[1] == "/":
        p.next()
        p.ring = ring
        gens = p.parse_poly_list()
        ring = ring.with_quotient(gens)
    if not p.at_end():
        p.fail("trailing input after ring")
    return ring
