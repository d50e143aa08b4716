"""The integral group ring of the cyclic group of order five.

An element is an integer combination a + b*r + c*r^2 + d*r^3 + e*r^4 where
r generates the group, r^5 = 1.  This is the whole group ring on the five
group elements, not a quotient polynomial ring, so it has zero divisors
and very few units.  Multiplication is cyclic convolution of exponents
mod 5.

Inversion solves the 5x5 linear system (multiplication-by-x) * y = e_1
exactly over the rationals and then demands an integral solution; anything
else raises NotAUnit.  The ring is commutative, so a one-sided inverse is
automatically two-sided.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import NotAUnit
from .formatting import Fmt, join_terms


@dataclass(frozen=True)
class GroupRingC5Element:
    coeffs: Tuple[int, int, int, int, int]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        if len(cs) != 5:
            raise ValueError("exactly five coefficients required")
        object.__setattr__(self, "coeffs", cs)

    # constructors

    @classmethod
    def zero(cls) -> "GroupRingC5Element":
        return cls((0, 0, 0, 0, 0))

    @classmethod
    def one(cls) -> "GroupRingC5Element":
        return cls((1, 0, 0, 0, 0))

    @classmethod
    def from_int(cls, n: int) -> "GroupRingC5Element":
        return cls((n, 0, 0, 0, 0))

    @classmethod
    def generator(cls, power: int = 1) -> "GroupRingC5Element":
        cs = [0] * 5
        cs[power % 5] = 1
        return cls(tuple(cs))

    # structure

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other) -> "GroupRingC5Element":
        if not isinstance(other, GroupRingC5Element):
            raise TypeError("expected a group ring element, got %r" % (other,))
        return other

    # arithmetic

    def __add__(self, other) -> "GroupRingC5Element":
        other = self._check(other)
        return GroupRingC5Element(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "GroupRingC5Element":
        return GroupRingC5Element(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "GroupRingC5Element":
        return self + (-self._check(other))

    def __mul__(self, other) -> "GroupRingC5Element":
        other = self._check(other)
        out = [0] * 5
        for p, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for q, b in enumerate(other.coeffs):
                if b:
                    out[(p + q) % 5] += a * b
        return GroupRingC5Element(tuple(out))

    def scale_exponents(self, m: int) -> "GroupRingC5Element":
        """Apply the group automorphism r -> r^m (for m prime to 5)."""
        out = [0] * 5
        for e, c in enumerate(self.coeffs):
            out[(e * m) % 5] += c
        return GroupRingC5Element(tuple(out))

    def inverse(self) -> "GroupRingC5Element":
        # column j of the system matrix holds the coordinates of self * r^j
        m = [
            [Fraction(self.coeffs[(i - j) % 5]) for j in range(5)]
            for i in range(5)
        ]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0), Fraction(0)]
        # exact gaussian elimination with partial (first nonzero) pivoting
        for col in range(5):
            piv = next((r for r in range(col, 5) if m[r][col] != 0), None)
            if piv is None:
                raise NotAUnit("%s is not a unit (singular system)" % (self,))
            m[col], m[piv] = m[piv], m[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / m[col][col]
            m[col] = [e * inv for e in m[col]]
            rhs[col] *= inv
            for r in range(5):
                if r != col and m[r][col] != 0:
                    factor = m[r][col]
                    m[r] = [e - factor * p for e, p in zip(m[r], m[col])]
                    rhs[r] -= factor * rhs[col]
        if any(v.denominator != 1 for v in rhs):
            raise NotAUnit("%s is not a unit in the integral group ring" % (self,))
        candidate = GroupRingC5Element(tuple(int(v) for v in rhs))
        if self * candidate != GroupRingC5Element.one():
            raise NotAUnit("%s is not a unit" % (self,))
        return candidate

    # display

    def split_sign(self):
        nonzero = [c for c in self.coeffs if c]
        if nonzero and all(c < 0 for c in nonzero):
            return -1, -self
        return 1, self

    def fmt(self) -> Fmt:
        if self.is_zero():
            return Fmt("0")
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = -1 if c < 0 else 1
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                rpart = "r" if e == 1 else "r^%d" % e
                body = rpart if mag == 1 else "%d*%s" % (mag, rpart)
            terms.append((sign, body))
        return Fmt(
            join_terms(terms),
            is_sum=len(terms) > 1,
            is_quotient=False,
            is_negative=terms[0][0] < 0,
        )

    def __str__(self) -> str:
        return self.fmt().text
