"""Operators over a coefficient algebra: sums of  a_i . endo^i .

An operator is stored in normal form as a dense tuple of coefficients,
lowest power first, with multiplication ALWAYS on the left of the power.
Trailing zero coefficients are stripped, so the zero operator is the empty
tuple; its degree is minus infinity so that degree arithmetic stays
truthful under composition.

Composition is where the twist earns its keep.  To normalize L1 . L2 the
right factor's coefficients must be pushed through powers of the
endomorphism one power at a time:

    endo . b  =  p_b . endo + q_b

so a coefficient vector v representing endo^i . b advances to the vector
for endo^(i+1) . b by sending v[t] into p at t+1 and q at t.  One advance
per power keeps the cost quadratic, not exponential.

Equality is equality of normal forms, except that an algebra declaring
endo_order = n first folds every exponent e >= n down to e mod n.  That is
the only representation quotient in play; no other identification between
powers is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .base import Algebra
from .errors import MixedAlgebras
from .formatting import join_terms


@dataclass(frozen=True, eq=False)
class Operator:
    algebra: Algebra
    coeffs: Tuple = ()

    def __post_init__(self):
        alg = self.algebra
        cs = list(self.coeffs)
        for c in cs:
            alg.check(c)
        while cs and alg.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # constructors

    @classmethod
    def zero(cls, algebra: Algebra) -> "Operator":
        return cls(algebra, ())

    @classmethod
    def identity(cls, algebra: Algebra) -> "Operator":
        return cls(algebra, (algebra.one(),))

    @classmethod
    def scalar(cls, algebra: Algebra, e) -> "Operator":
        return cls(algebra, (e,))

    @classmethod
    def d(cls, algebra: Algebra, power: int = 1) -> "Operator":
        """The bare operator endo^power."""
        if power < 0:
            raise ValueError("negative power")
        return cls(algebra, (algebra.zero(),) * power + (algebra.one(),))

    # structure

    @property
    def degree(self):
        """Representation degree; minus infinity for the zero operator."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.algebra.zero()

    def _same_algebra(self, other: "Operator") -> Algebra:
        if self.algebra != other.algebra:
            raise MixedAlgebras(
                "operators over %r and %r cannot be combined"
                % (self.algebra.describe(), other.algebra.describe())
            )
        return self.algebra

    def _reduced_coeffs(self) -> Tuple:
        """Coefficients after the declared exponent folding, if any."""
        n = self.algebra.endo_order
        if n is None or len(self.coeffs) <= n:
            return self.coeffs
        alg = self.algebra
        acc = [alg.zero()] * n
        for e, c in enumerate(self.coeffs):
            t = e if e < n else e % n
            acc[t] = alg.add(acc[t], c)
        while acc and alg.is_zero(acc[-1]):
            acc.pop()
        return tuple(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Operator):
            return NotImplemented
        self._same_algebra(other)
        return self._reduced_coeffs() == other._reduced_coeffs()

    def __hash__(self) -> int:
        return hash((self.algebra, self._reduced_coeffs()))

    # arithmetic

    def __add__(self, other: "Operator") -> "Operator":
        alg = self._same_algebra(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Operator(
            alg, tuple(alg.add(self.coeff(i), other.coeff(i)) for i in range(n))
        )

    def __neg__(self) -> "Operator":
        return Operator(self.algebra, tuple(self.algebra.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Operator") -> "Operator":
        return self + (-other)

    def scale_left(self, a) -> "Operator":
        """Left multiplication by a ring element: a . L."""
        alg = self.algebra
        alg.check(a)
        return Operator(alg, tuple(alg.mul(a, c) for c in self.coeffs))

    def compose(self, other: "Operator") -> "Operator":
        """Normal form of self . other (apply other first)."""
        alg = self._same_algebra(other)
        if self.is_zero() or other.is_zero():
            return Operator.zero(alg)
        top = len(self.coeffs) - 1
        acc = [alg.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, b in enumerate(other.coeffs):
            if alg.is_zero(b):
                continue
            vec = [b]  # coefficients of endo^i . b, starting at i = 0
            for i, a in enumerate(self.coeffs):
                if not alg.is_zero(a):
                    for t, c in enumerate(vec):
                        if not alg.is_zero(c):
                            acc[t + j] = alg.add(acc[t + j], alg.mul(a, c))
                if i < top:
                    nxt = [alg.zero()] * (len(vec) + 1)
                    for t, c in enumerate(vec):
                        if alg.is_zero(c):
                            continue
                        tw = alg.twist(c)
                        nxt[t + 1] = alg.add(nxt[t + 1], tw.p)
                        nxt[t] = alg.add(nxt[t], tw.q)
                    vec = nxt
        return Operator(alg, tuple(acc))

    def __mul__(self, other) -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        return self.compose(other)

    def apply(self, f):
        """Evaluate the operator on a ring element."""
        alg = self.algebra
        alg.check(f)
        acc = alg.zero()
        cur = f
        for i, a in enumerate(self.coeffs):
            if i:
                cur = alg.endo(cur)
            if not alg.is_zero(a):
                acc = alg.add(acc, alg.mul(a, cur))
        return acc

    # display

    def format(self) -> str:
        alg = self.algebra
        if self.is_zero():
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if alg.is_zero(c):
                continue
            sign, mag = alg.split_sign(c)
            mf = alg.element_fmt(mag)
            if d == 0:
                wrap = (sign < 0 and mf.is_sum) or (mf.is_negative and terms)
                body = "(%s)" % mf.text if wrap else mf.text
            else:
                dpart = "D" if d == 1 else "D^%d" % d
                if alg.equal(mag, alg.one()):
                    body = dpart
                else:
                    wrap = mf.is_sum or mf.is_quotient or mf.is_negative
                    coeff_text = "(%s)" % mf.text if wrap else mf.text
                    body = "%s*%s" % (coeff_text, dpart)
            terms.append((sign, body))
        return join_terms(terms)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return "Operator(%s: %s)" % (self.algebra.describe(), self.format())
