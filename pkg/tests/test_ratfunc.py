from fractions import Fraction

import pytest
from hypothesis import assume, given

from opfactor import MixedAlgebras, NotAUnit, Poly, RationalFunction

from helpers import polys, ratfuncs


def rf(num, den=None, var="x"):
    return RationalFunction(Poly(num), Poly(den) if den is not None else None, var)


def test_canonical_invariants():
    r = rf([0, 2], [0, 0, 4])  # 2x / 4x^2
    assert r.den.leading == 1
    assert Poly.gcd(r.num, r.den).degree <= 0
    assert r == rf([1], [0, 2])  # 1 / 2x
    z = rf([0], [0, 1])
    assert z.num == Poly() and z.den == Poly.one()


@given(polys(), polys(2))
def test_canonicalization_idempotent(n, d):
    assume(not d.is_zero())
    r = RationalFunction(n, d, "x")
    again = RationalFunction(r.num, r.den, "x")
    assert again.num == r.num and again.den == r.den


@given(polys(2), polys(2), polys(2), polys(2))
def test_equality_iff_cross_multiplication(a, b, c, d):
    assume(not b.is_zero() and not d.is_zero())
    left = RationalFunction(a, b, "x")
    right = RationalFunction(c, d, "x")
    assert (left == right) == (a * d == c * b)


@given(ratfuncs("x"), ratfuncs("x"), ratfuncs("x"))
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == RationalFunction.zero("x")


@given(ratfuncs("x"))
def test_inverse_roundtrip(r):
    if r.is_zero():
        with pytest.raises(NotAUnit):
            r.inverse()
        return
    assert r * r.inverse() == RationalFunction.one("x")
    assert r.inverse().inverse() == r


@given(ratfuncs("x"), ratfuncs("x"))
def test_derivative_product_rule(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_derivative_quotient():
    r = rf([1], [0, 1])  # 1/x
    assert r.derivative() == rf([-1], [0, 0, 1])


@given(ratfuncs("n"), ratfuncs("n"))
def test_shift_is_multiplicative_and_additive(a, b):
    assert (a * b).shifted() == a.shifted() * b.shifted()
    assert (a + b).shifted() == a.shifted() + b.shifted()


def test_shift_moves_the_variable():
    n = RationalFunction.variable("n")
    assert n.shifted() == n + 1
    assert (n * n).shifted() == n * n + 2 * n + 1


def test_mixed_variables_rejected():
    with pytest.raises(MixedAlgebras):
        RationalFunction.variable("x") + RationalFunction.variable("n")


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        rf([1], [0])


def test_display():
    assert str(rf([3], [0, 0, 1])) == "3/x^2"
    assert str(rf([Fraction(-3, 2)], [0, 1])) == "-3/(2*x)"
    assert str(rf([2, 2, 1], [0, 1, 1], "n")) == "(n^2 + 2*n + 2)/(n^2 + n)"
    assert str(rf([Fraction(3, 2)])) == "3/2"
    assert str(rf([0])) == "0"
    assert str(rf([1], [1, 1])) == "1/(x + 1)"
