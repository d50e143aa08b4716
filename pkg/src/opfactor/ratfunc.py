"""Exact rational functions in one variable over the rationals.

Canonical form invariants, enforced by the constructor:
  * the denominator is nonzero and monic,
  * numerator and denominator share no polynomial factor (monic gcd is 1),
  * zero is stored as 0/1.
With those three, the representation of a value is unique, so equality is
componentwise and needs no cross multiplication.

Each value carries its variable name.  Mixing two variables in one
operation raises MixedAlgebras; this is what keeps elements of the x-world
and the n-world apart at the lowest level.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import MixedAlgebras, NotAUnit
from .formatting import Fmt
from .poly import Poly, integer_cleared

Scalar = Union[int, Fraction]


class RationalFunction:
    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=None, var: str = "x"):
        if not isinstance(num, Poly):
            num = Poly.constant(num)
        if den is None:
            den = Poly.one()
        elif not isinstance(den, Poly):
            den = Poly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly.zero(), Poly.one()
        else:
            g = Poly.gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            if lead != 1:
                num = Poly(tuple(c / lead for c in num.coeffs))
                den = den.monic()
        self.num = num
        self.den = den
        self.var = var

    # constructors

    @classmethod
    def zero(cls, var: str) -> "RationalFunction":
        return cls(Poly.zero(), None, var)

    @classmethod
    def one(cls, var: str) -> "RationalFunction":
        return cls(Poly.one(), None, var)

    @classmethod
    def constant(cls, c: Scalar, var: str) -> "RationalFunction":
        return cls(Poly.constant(c), None, var)

    @classmethod
    def variable(cls, var: str) -> "RationalFunction":
        return cls(Poly.variable(), None, var)

    # structure

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == Poly.one() and self.den == Poly.one()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            if isinstance(other, (int, Fraction)):
                other = RationalFunction.constant(other, self.var)
            else:
                return NotImplemented
        return (
            self.var == other.var
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.var, self.num, self.den))

    def __repr__(self) -> str:
        return "RationalFunction(%r, %r, %r)" % (self.num, self.den, self.var)

    def _same_world(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other, self.var)
        if not isinstance(other, RationalFunction):
            raise TypeError("expected a rational function, got %r" % (other,))
        if other.var != self.var:
            raise MixedAlgebras(
                "cannot combine rational functions in %r and %r"
                % (self.var, other.var)
            )
        return other

    # arithmetic

    def __add__(self, other) -> "RationalFunction":
        other = self._same_world(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            self.var,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, self.var)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._same_world(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._same_world(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._same_world(other)
        return RationalFunction(
            self.num * other.num, self.den * other.den, self.var
        )

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise NotAUnit("zero has no inverse")
        return RationalFunction(self.den, self.num, self.var)

    def __truediv__(self, other) -> "RationalFunction":
        return self * self._same_world(other).inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._same_world(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n, self.var)

    # the two endomorphism building blocks used by the built-in algebras

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
            self.var,
        )

    def shifted(self) -> "RationalFunction":
        """Substitute (variable + 1) for the variable."""
        return RationalFunction(self.num.shifted(), self.den.shifted(), self.var)

    # display

    def split_sign(self):
        """Fold out an overall minus when the numerator leads negative."""
        if self.num.leading < 0:
            return -1, -self
        return 1, self

    def fmt(self) -> Fmt:
        if self.is_zero():
            return Fmt("0")
        n, d = integer_cleared(self.num, self.den)
        nf = n.fmt(self.var)
        if d == Poly.one():
            return nf
        ntext = "(%s)" % nf.text if nf.is_sum else nf.text
        df = d.fmt(self.var)
        bare_den = (not df.is_sum) and (
            d.degree == 0 or (d.leading == 1 and len([c for c in d.coeffs if c]) == 1)
        )
        dtext = df.text if bare_den else "(%s)" % df.text
        return Fmt(
            "%s/%s" % (ntext, dtext),
            is_sum=False,
            is_quotient=True,
            is_negative=nf.is_negative,
        )

    def __str__(self) -> str:
        return self.fmt().text
