"""Tiny recursive-descent parser for ring expressions.

Grammar (integers, names, +, -, *, ^ and parentheses):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-'* atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

The parser is generic: it produces values through an adapter that knows
how to build constants, resolve names, add, negate, multiply and raise to
a power.  The same grammar therefore serves the presented rings and the
fixed-point oracle algebra.
"""

from __future__ import annotations


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_MINUS = {"-", "−"}  # ASCII hyphen and the unicode minus sign


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _MINUS:
            tokens.append(("op", "-", i))
            i += 1
            continue
        if ch in "+*^()":
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, adapter):
        self.tokens = tokens
        self.pos = 0
        self.adapter = adapter

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, value, position = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", position)

    def parse_expr(self):
        value = self.parse_term()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in ("+", "-"):
                self.take()
                rhs = self.parse_term()
                if op == "-":
                    rhs = self.adapter.neg(rhs)
                value = self.adapter.add(value, rhs)
            else:
                return value

    def parse_term(self):
        value = self.parse_factor()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op == "*":
                self.take()
                value = self.adapter.mul(value, self.parse_factor())
            else:
                return value

    def parse_factor(self):
        negations = 0
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op == "-":
                self.take()
                negations += 1
            else:
                break
        value = self.parse_atom()
        kind, op, position = self.peek()
        if kind == "op" and op == "^":
            self.take()
            kind, exponent, position = self.take()
            if kind != "int":
                raise ParseError("exponent must be an integer literal", position)
            value = self.adapter.power(value, exponent)
        if negations % 2:
            value = self.adapter.neg(value)
        return value

    def parse_atom(self):
        kind, value, position = self.take()
        if kind == "int":
            return self.adapter.const(value)
        if kind == "name":
            return self.adapter.atom(value, position)
        if kind == "op" and value == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ParseError("expected a number, name or parenthesis", position)


def evaluate(text, adapter):
    parser = _Parser(_tokenize(text), adapter)
    value = parser.parse_expr()
    kind, _, position = parser.peek()
    if kind != "end":
        raise ParseError("trailing input", position)
    return value


class RingAdapter:
    """Adapter evaluating expressions inside a PresentedRing.

    Extra aliases map additional names to elements; in H-type rings the
    name `t` is accepted for the square of the degree-one torsion class.
    """

    def __init__(self, ring, aliases=None):
        self.ring = ring
        self.aliases = dict(aliases or {})

    def const(self, value):
        return value * self.ring.one()

    def atom(self, name, position):
        if name in self.aliases:
            return self.aliases[name]
        try:
            return self.ring.gen(name)
        except KeyError:
            raise ParseError(f"unknown generator {name!r} in ring {self.ring.name}",
                             position) from None

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def power(self, a, k):
        return a ** k


def parse_expression(ring, text):
    """Parse text into a normalized element of the ring."""
    aliases = {}
    names = {g.name for g in ring.generators}
    if "t" not in names and "t12" in names:
        aliases["t"] = ring.gen("t12") ** 2
    return evaluate(text, RingAdapter(ring, aliases))
