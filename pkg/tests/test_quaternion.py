"""Quaternion arithmetic over the rational function scalars."""

import pytest
from hypothesis import given

from opfactor import NotAUnit, Quaternion, RationalFunction

from helpers import quaternions


def scalar(value):
    return Quaternion.scalar(RationalFunction.constant(value, "x"))


def unit(which):
    if which == "1":
        return Quaternion.one("x")
    return Quaternion.unit(which, "x")


HAMILTON = {
    ("i", "i"): (-1, "1"),
    ("j", "j"): (-1, "1"),
    ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"),
    ("j", "i"): (-1, "k"),
    ("j", "k"): (1, "i"),
    ("k", "j"): (-1, "i"),
    ("k", "i"): (1, "j"),
    ("i", "k"): (-1, "j"),
}


def test_hamilton_table():
    for (left, right), (sign, result) in HAMILTON.items():
        assert unit(left) * unit(right) == scalar(sign) * unit(result)
    for name in "1ijk":
        assert unit("1") * unit(name) == unit(name)
        assert unit(name) * unit("1") == unit(name)


@given(quaternions(), quaternions())
def test_multiplication_not_commutative_in_general(p, q):
    # only checks the ring laws that do hold
    assert (p + q).conjugate() == p.conjugate() + q.conjugate()
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()


@given(quaternions(), quaternions(), quaternions())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r


@given(quaternions())
def test_norm_is_scalar(q):
    n = q * q.conjugate()
    zero = RationalFunction.zero("x")
    assert n.b == zero and n.c == zero and n.d == zero
    assert n == q.conjugate() * q


@given(quaternions())
def test_inverse_two_sided(q):
    if q.is_zero():
        with pytest.raises(NotAUnit):
            q.inverse()
        return
    one = Quaternion.one("x")
    assert q * q.inverse() == one
    assert q.inverse() * q == one


def test_inverse_of_x_times_k():
    x = RationalFunction.variable("x")
    zero = RationalFunction.zero("x")
    q = Quaternion(zero, zero, zero, x)
    inv = q.inverse()
    # (x k)^-1 = -(1/x) k
    assert inv == Quaternion(zero, zero, zero, -x.inverse())


@given(quaternions(), quaternions())
def test_derivative_product_rule(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


def test_display():
    x = RationalFunction.variable("x")
    zero = RationalFunction.zero("x")
    assert str(Quaternion(zero, x * x, zero, zero)) == "x^2*i"
    assert str(Quaternion(x, -x, zero, zero)) == "x - x*i"
    assert str(Quaternion(zero, zero, zero, zero)) == "0"
    assert str(unit("j")) == "j"
    assert str(scalar(-2)) == "-2"
