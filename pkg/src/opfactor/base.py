"""The abstract coefficient algebra interface.

An algebra here is a unital associative ring A together with one additive
map on it, written endo().  The map need not respect products (on the
rational function algebras it is a derivative or a difference); what it
must have is a twist, defined below.  Operators are built over the pair
(A, endo), and everything the operator layer needs is expressed through
this interface:

  * ring arithmetic (add, sub, neg, mul, zero, one),
  * the endomorphism itself,
  * a twist: for every f a pair (p, q) with

        endo(f * g) = p * endo(g) + q * g   for all g,

    which is exactly what lets `endo after multiplication-by-f` be
    rewritten as `multiplication * endo + multiplication`, the move that
    normalizes operator compositions,
  * partial inversion (try_invert), total on the division-ring algebras
    and honestly partial on the group ring.

Every element knows which algebra owns it; `check` enforces that and
raises MixedAlgebras otherwise, so cross-algebra arithmetic cannot happen
silently.  Elements are immutable values and all operations return new
values.

An algebra may declare `endo_order = n` when endo^n is the identity map
AND the corresponding operator identity holds, in which case operator
equality folds exponents above n - 1 (see the operator module).  The
built-in group ring declares order 4; the others declare nothing.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from .errors import MixedAlgebras
from .formatting import Fmt


@dataclass(frozen=True)
class TwistPair:
    """The rewrite data for one element: endo . f = p . endo + q ."""

    p: Any
    q: Any


class Algebra(ABC):
    """A coefficient ring with a distinguished endomorphism."""

    name: str = "?"
    endo_order: Optional[int] = None

    # identity and membership

    def _key(self) -> tuple:
        return ()

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash((type(self), self._key()))

    def __repr__(self) -> str:
        return "<algebra %s>" % self.describe()

    def describe(self) -> str:
        return self.name

    @abstractmethod
    def check(self, e) -> None:
        """Raise MixedAlgebras unless e is an element of this algebra."""

    def _reject(self, e):
        raise MixedAlgebras(
            "%r is not an element of algebra %r" % (e, self.describe())
        )

    # constants

    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def one(self): ...

    @abstractmethod
    def from_fraction(self, q: Fraction):
        """Embed a rational scalar, when the algebra contains it."""

    # ring operations (validated wrappers over the element types)

    def add(self, a, b):
        self.check(a)
        self.check(b)
        return a + b

    def sub(self, a, b):
        self.check(a)
        self.check(b)
        return a - b

    def neg(self, a):
        self.check(a)
        return -a

    def mul(self, a, b):
        self.check(a)
        self.check(b)
        return a * b

    def equal(self, a, b) -> bool:
        self.check(a)
        self.check(b)
        return a == b

    def is_zero(self, a) -> bool:
        self.check(a)
        return a.is_zero()

    # the endomorphism and its twist

    @abstractmethod
    def endo(self, f): ...

    def endo_pow(self, f, k: int):
        for _ in range(k):
            f = self.endo(f)
        return f

    @abstractmethod
    def twist(self, f) -> TwistPair: ...

    @abstractmethod
    def try_invert(self, f):
        """Return the two-sided inverse of f, or raise NotAUnit."""

    # parsing and printing hooks

    @abstractmethod
    def symbols(self) -> Dict[str, Any]:
        """Named atoms the expression grammar may use in this algebra."""

    def element_fmt(self, f) -> Fmt:
        self.check(f)
        return f.fmt()

    def format_element(self, f) -> str:
        return self.element_fmt(f).text

    def split_sign(self, f) -> Tuple[int, Any]:
        self.check(f)
        return f.split_sign()
