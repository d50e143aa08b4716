"""Quaternions whose components are exact rational functions of x.

A value is a + b*i + c*j + d*k with the Hamilton table
    i*i = j*j = k*k = -1,  i*j = k,  j*k = i,  k*i = j,
and the reversed products negated.  Components live in one shared variable;
the constructor refuses mixed variables.  Every nonzero value is a unit:
the squared norm a^2 + b^2 + c^2 + d^2 is a rational function that only
vanishes when all four components do, so conj(q) / norm inverts q from both
sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MixedAlgebras, NotAUnit
from .formatting import Fmt, join_terms
from .ratfunc import RationalFunction


@dataclass(frozen=True)
class Quaternion:
    a: RationalFunction
    b: RationalFunction
    c: RationalFunction
    d: RationalFunction

    def __post_init__(self):
        vars_ = {comp.var for comp in self.components}
        if len(vars_) != 1:
            raise MixedAlgebras("quaternion components use different variables")

    @property
    def components(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def var(self) -> str:
        return self.a.var

    # constructors

    @classmethod
    def scalar(cls, r: RationalFunction) -> "Quaternion":
        z = RationalFunction.zero(r.var)
        return cls(r, z, z, z)

    @classmethod
    def from_fraction(cls, q, var: str = "x") -> "Quaternion":
        return cls.scalar(RationalFunction.constant(q, var))

    @classmethod
    def zero(cls, var: str = "x") -> "Quaternion":
        return cls.scalar(RationalFunction.zero(var))

    @classmethod
    def one(cls, var: str = "x") -> "Quaternion":
        return cls.scalar(RationalFunction.one(var))

    @classmethod
    def unit(cls, name: str, var: str = "x") -> "Quaternion":
        z = RationalFunction.zero(var)
        o = RationalFunction.one(var)
        table = {
            "i": (z, o, z, z),
            "j": (z, z, o, z),
            "k": (z, z, z, o),
        }
        return cls(*table[name])

    # structure

    def is_zero(self) -> bool:
        return all(comp.is_zero() for comp in self.components)

    def _check(self, other) -> "Quaternion":
        if not isinstance(other, Quaternion):
            raise TypeError("expected a quaternion, got %r" % (other,))
        if other.var != self.var:
            raise MixedAlgebras("quaternions over different variables")
        return other

    # arithmetic

    def __add__(self, other) -> "Quaternion":
        other = self._check(other)
        return Quaternion(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other) -> "Quaternion":
        return self + (-self._check(other))

    def __mul__(self, other) -> "Quaternion":
        other = self._check(other)
        a1, b1, c1, d1 = self.components
        a2, b2, c2, d2 = other.components
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Quaternion":
        """Two-sided inverse conj(q) * (q * conj(q))^-1."""
        norm = self * self.conjugate()
        if not (norm.b.is_zero() and norm.c.is_zero() and norm.d.is_zero()):
            raise NotAUnit("norm is not scalar")  # cannot happen
        if norm.a.is_zero():
            raise NotAUnit("zero quaternion has no inverse")
        s = norm.a.inverse()
        conj = self.conjugate()
        return Quaternion(conj.a * s, conj.b * s, conj.c * s, conj.d * s)

    def derivative(self) -> "Quaternion":
        return Quaternion(*(comp.derivative() for comp in self.components))

    # display

    def split_sign(self):
        nonzero = [comp for comp in self.components if not comp.is_zero()]
        if nonzero and all(comp.num.leading < 0 for comp in nonzero):
            return -1, -self
        return 1, self

    def fmt(self) -> Fmt:
        if self.is_zero():
            return Fmt("0")
        terms = []
        scalar_is_sum = False
        for comp, unit in zip(self.components, ("", "i", "j", "k")):
            if comp.is_zero():
                continue
            sign, mag = comp.split_sign()
            mf = mag.fmt()
            if not unit:
                # a positive scalar sum reassociates fine when appended
                # bare; under a minus it has to keep its parentheses
                if sign < 0 and mf.is_sum:
                    terms.append((sign, "(%s)" % mf.text))
                else:
                    terms.append((sign, mf.text))
                    scalar_is_sum = mf.is_sum
            elif mag.is_one():
                terms.append((sign, unit))
            else:
                body = "(%s)" % mf.text if mf.is_sum else mf.text
                terms.append((sign, "%s*%s" % (body, unit)))
        text = join_terms(terms)
        single = len(terms) == 1
        return Fmt(
            text,
            is_sum=(not single) or scalar_is_sum,
            is_quotient=single and "/" in terms[0][1],
            is_negative=terms[0][0] < 0,
        )

    def __str__(self) -> str:
        return self.fmt().text
