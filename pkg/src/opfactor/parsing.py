"""Expression text for elements and operators, one grammar for both.

    expr    :=  term (('+' | '-') term)*
    term    :=  factor (('*' | '/') factor)*
    factor  :=  '-' factor | power
    power   :=  atom ('^' INTEGER)?
    atom    :=  INTEGER | SYMBOL | 'D' | '(' expr ')'

Whitespace is insignificant.  Juxtaposition is not multiplication: `2x`
is a syntax error, write `2*x`.  `^` binds tighter than unary minus,
which binds tighter than `*` and `/`, which bind tighter than binary
`+` and `-`.  Exponents are nonnegative integer literals.

SYMBOL is a single letter owned by the algebra: `x` (and `i j k` for the
quaternions), `n` for the difference algebra, `r` for the group ring.
`D` denotes the endomorphism and is only legal when parsing operators.

Everything evaluates in the operator domain.  A bare element is a degree
zero operator; `*` is composition, which on degree zero operators is
plain ring multiplication; `a / b` is `a` composed with the inverse of
the degree zero operator `b`, and is rejected when `b` has positive
degree or its coefficient is not a unit.  Element parsing runs the same
evaluator with `D` disabled and unwraps the constant coefficient.

Printing lives with the value types; this module adds the JSON form of
operators: {"algebra": <selector>, "coeffs": [<element text>, ...]},
coefficients listed from power zero upward.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from .algebras import get_algebra
from .base import Algebra
from .errors import NotAUnit, ParseError
from .operators import Operator

_TOKEN = re.compile(r"\d+|[A-Za-z]|[\^*/+()-]|\S")


class Token(NamedTuple):
    text: str
    pos: int  # 1-based character position


def _tokenize(text: str) -> List[Token]:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        tok = m.group(0)
        if not (tok.isdigit() or tok.isalpha() or tok in "^*/+-()"):
            raise ParseError("unexpected character %r" % tok, i + 1)
        out.append(Token(tok, i + 1))
        i = m.end()
    return out


class _Parser:
    def __init__(self, text: str, algebra: Algebra, allow_d: bool):
        self.text = text
        self.algebra = algebra
        self.allow_d = allow_d
        self.tokens = _tokenize(text)
        self.pos = 0
        self.symbols = algebra.symbols()

    # token plumbing

    def _peek(self) -> Optional[Token]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def _next(self) -> Token:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text) + 1)
        self.pos += 1
        return tok

    def _end_pos(self) -> int:
        tok = self._peek()
        return tok.pos if tok else len(self.text) + 1

    # grammar

    def parse(self) -> Operator:
        if not self.tokens:
            raise ParseError("empty expression", 1)
        value = self._expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(
                "expected an operator or end of input, found %r" % tok.text,
                tok.pos,
            )
        return value

    def _expr(self) -> Operator:
        value = self._term()
        while True:
            tok = self._peek()
            if tok is None or tok.text not in "+-":
                return value
            self._next()
            rhs = self._term()
            value = value + rhs if tok.text == "+" else value - rhs

    def _term(self) -> Operator:
        value = self._factor()
        while True:
            tok = self._peek()
            if tok is None or tok.text not in "*/":
                return value
            self._next()
            rhs = self._factor()
            if tok.text == "*":
                value = value.compose(rhs)
            else:
                value = self._divide(value, rhs, tok.pos)

    def _divide(self, value: Operator, rhs: Operator, pos: int) -> Operator:
        if len(rhs.coeffs) > 1:
            raise ParseError("cannot divide by an operator of positive degree", pos)
        coeff = rhs.coeff(0)
        try:
            inv = self.algebra.try_invert(coeff)
        except NotAUnit:
            raise ParseError(
                "division by %s, which is not a unit here"
                % self.algebra.format_element(coeff),
                pos,
            ) from None
        return value.compose(Operator.scalar(self.algebra, inv))

    def _factor(self) -> Operator:
        tok = self._peek()
        if tok is not None and tok.text == "-":
            self._next()
            return -self._factor()
        return self._power()

    def _power(self) -> Operator:
        value = self._atom()
        tok = self._peek()
        if tok is None or tok.text != "^":
            return value
        self._next()
        etok = self._peek()
        if etok is None or not etok.text.isdigit():
            raise ParseError(
                "expected a nonnegative integer exponent", self._end_pos()
            )
        self._next()
        n = int(etok.text)
        out = Operator.identity(self.algebra)
        for _ in range(n):
            out = out.compose(value)
        return out

    def _atom(self) -> Operator:
        tok = self._next()
        text = tok.text
        if text.isdigit():
            return Operator.scalar(
                self.algebra, self.algebra.from_fraction(Fraction(int(text)))
            )
        if text == "(":
            value = self._expr()
            closing = self._peek()
            if closing is None or closing.text != ")":
                raise ParseError("expected ')'", self._end_pos())
            self._next()
            return value
        if text == ")":
            raise ParseError("unmatched ')'", tok.pos)
        if text == "D":
            if not self.allow_d:
                raise ParseError(
                    "D is an operator, not an element of the algebra", tok.pos
                )
            return Operator.d(self.algebra)
        if text.isalpha():
            elem = self.symbols.get(text)
            if elem is None:
                raise ParseError(
                    "symbol %r is not defined in algebra %r"
                    % (text, self.algebra.describe()),
                    tok.pos,
                )
            return Operator.scalar(self.algebra, elem)
        raise ParseError("unexpected token %r" % text, tok.pos)


def parse_operator(text: str, algebra: Algebra) -> Operator:
    return _Parser(text, algebra, allow_d=True).parse()


def parse_element(text: str, algebra: Algebra):
    op = _Parser(text, algebra, allow_d=False).parse()
    # without D every value stays at degree zero
    return op.coeff(0)


# JSON form

def operator_to_json(op: Operator) -> dict:
    return {
        "algebra": op.algebra.name,
        "coeffs": [op.algebra.format_element(c) for c in op.coeffs],
    }


def operator_from_json(data: dict, algebra: Optional[Algebra] = None) -> Operator:
    name = data["algebra"]
    if algebra is None:
        algebra = get_algebra(name)
    elif algebra.name != name:
        raise ValueError(
            "operator tagged %r cannot load into algebra %r" % (name, algebra.name)
        )
    coeffs = [parse_element(t, algebra) for t in data["coeffs"]]
    return Operator(algebra, tuple(coeffs))
