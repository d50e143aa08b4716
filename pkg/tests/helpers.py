"""Shared random samplers and hypothesis strategies for the test suite.

Two flavors on purpose: plain random.Random samplers for the seeded bulk
loops in the acceptance tests, hypothesis strategies for the per-module
property tests.  Magnitudes stay small so exact arithmetic stays quick.
"""

from fractions import Fraction

import hypothesis.strategies as st

from opfactor import (
    GroupRingC5Element,
    Operator,
    Poly,
    Quaternion,
    RationalFunction,
    get_algebra,
)

QX = get_algebra("qx")
QUAT = get_algebra("quat")
DIFF1 = get_algebra("diff", Fraction(1))
C5 = get_algebra("c5")

ALL_ALGEBRAS = (QX, QUAT, DIFF1, C5)

_DENOMS = ((1,), (0, 1), (1, 1))  # 1, x, x + 1


# random.Random samplers

def rand_fraction(rng, lo=-4, hi=4, maxden=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, maxden))


def rand_poly(rng, max_deg=2):
    return Poly([rand_fraction(rng) for _ in range(rng.randint(1, max_deg + 1))])


def rand_ratfunc(rng, var, max_deg=2, nonzero=False):
    num = rand_poly(rng, max_deg)
    if nonzero:
        while num.is_zero():
            num = rand_poly(rng, max_deg)
    den = Poly(rng.choice(_DENOMS))
    return RationalFunction(num, den, var)


def rand_quaternion(rng, nonzero=False):
    comps = [rand_ratfunc(rng, "x", max_deg=1) for _ in range(4)]
    if nonzero and all(c.is_zero() for c in comps):
        comps[rng.randrange(4)] = RationalFunction.one("x")
    return Quaternion(*comps)


def rand_c5(rng):
    return GroupRingC5Element(tuple(rng.randint(-3, 3) for _ in range(5)))


def rand_element(rng, algebra, nonzero=False):
    name = algebra.name
    if name == "qx":
        return rand_ratfunc(rng, "x", nonzero=nonzero)
    if name == "diff":
        return rand_ratfunc(rng, "n", nonzero=nonzero)
    if name == "quat":
        return rand_quaternion(rng, nonzero=nonzero)
    if name == "c5":
        e = rand_c5(rng)
        if nonzero and e.is_zero():
            e = GroupRingC5Element.generator(rng.randrange(5))
        return e
    raise ValueError(name)


def rand_unit(rng, algebra):
    """An invertible element.  For the group ring only the trivial units
    are sampled; anything nonzero works in the division rings."""
    if algebra.name == "c5":
        e = GroupRingC5Element.generator(rng.randrange(5))
        return -e if rng.random() < 0.5 else e
    return rand_element(rng, algebra, nonzero=True)


def rand_operator(rng, algebra, max_deg=2, monic=False):
    coeffs = [rand_element(rng, algebra) for _ in range(rng.randint(1, max_deg + 1))]
    if monic:
        coeffs.append(algebra.one())
    return Operator(algebra, tuple(coeffs))


# hypothesis strategies

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def polys(max_deg=2):
    return st.lists(small_fractions, min_size=0, max_size=max_deg + 1).map(Poly)


def ratfuncs(var, max_deg=2):
    dens = st.sampled_from([Poly(d) for d in _DENOMS])
    return st.builds(
        lambda n, d: RationalFunction(n, d, var), polys(max_deg), dens
    )


def quaternions(max_deg=1):
    comp = ratfuncs("x", max_deg)
    return st.builds(Quaternion, comp, comp, comp, comp)


def c5_elements():
    return st.builds(
        GroupRingC5Element,
        st.tuples(*(st.integers(-3, 3) for _ in range(5))),
    )


def elements(algebra):
    name = algebra.name
    if name == "qx":
        return ratfuncs("x")
    if name == "diff":
        return ratfuncs("n")
    if name == "quat":
        return quaternions()
    if name == "c5":
        return c5_elements()
    raise ValueError(name)


def operators(algebra, max_deg=2):
    return st.lists(elements(algebra), min_size=0, max_size=max_deg + 1).map(
        lambda cs: Operator(algebra, tuple(cs))
    )
