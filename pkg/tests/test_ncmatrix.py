"""Matrix layer: order-sensitive products and certified inversion."""

import random

import pytest

from opfactor import (
    MixedAlgebras,
    NCMatrix,
    NotInvertible,
    RationalFunction,
    ShapeMismatch,
)

from helpers import C5, DIFF1, QUAT, QX, rand_c5, rand_ratfunc


def quat_unit(name):
    return QUAT.symbols()[name]


def test_shape_validation():
    with pytest.raises(ShapeMismatch):
        NCMatrix(QX, 2, 2, (QX.one(),) * 3)
    with pytest.raises(MixedAlgebras):
        NCMatrix(QX, 1, 1, (QUAT.one(),))


def test_product_preserves_factor_order():
    i, j, k = (quat_unit(s) for s in "ijk")
    mi = NCMatrix(QUAT, 1, 1, (i,))
    mj = NCMatrix(QUAT, 1, 1, (j,))
    assert (mi * mj).entry(0, 0) == k
    assert (mj * mi).entry(0, 0) == QUAT.neg(k)


def test_product_shape_rules():
    a = NCMatrix.from_rows(QX, [[QX.one(), QX.zero()]])  # 1x2
    b = NCMatrix.from_rows(QX, [[QX.one()], [QX.one()]])  # 2x1
    assert (a * b).rows == 1 and (a * b).cols == 1
    with pytest.raises(ShapeMismatch):
        b * NCMatrix.from_rows(QX, [[QX.one()], [QX.one()]])
    with pytest.raises(MixedAlgebras):
        a * NCMatrix.identity(DIFF1, 2)


def test_identity_and_associativity():
    rng = random.Random(31)
    mats = [
        NCMatrix(C5, 2, 2, tuple(rand_c5(rng) for _ in range(4)))
        for _ in range(3)
    ]
    ident = NCMatrix.identity(C5, 2)
    a, b, c = mats
    assert a * ident == a and ident * a == a
    assert (a * b) * c == a * (b * c)


def _certify(mat, inv):
    ident = NCMatrix.identity(mat.algebra, mat.rows)
    assert mat * inv == ident
    assert inv * mat == ident


def test_inverse_quaternion_sample():
    i, j, k = (quat_unit(s) for s in "ijk")
    one = QUAT.one()
    m = NCMatrix.from_rows(QUAT, [[i, j], [QUAT.zero(), k]])
    _certify(m, m.inverse())


def test_inverse_requires_square():
    m = NCMatrix.from_rows(QX, [[QX.one(), QX.zero()]])
    with pytest.raises(ShapeMismatch):
        m.inverse()


def test_singular_matrices_rejected():
    x = QX.symbols()["x"]
    two_x = QX.add(x, x)
    m = NCMatrix.from_rows(QX, [[x, two_x], [x, two_x]])
    with pytest.raises(NotInvertible):
        m.inverse()
    zero = NCMatrix(QX, 2, 2, (QX.zero(),) * 4)
    with pytest.raises(NotInvertible):
        zero.inverse()


def test_c5_matrix_with_nonunit_pivot_chain():
    # 1 + r is not a unit and no row operation can fix a 1x1
    from opfactor import GroupRingC5Element

    g = GroupRingC5Element((1, 1, 0, 0, 0))
    m = NCMatrix(C5, 1, 1, (g,))
    with pytest.raises(NotInvertible):
        m.inverse()


def test_pivot_search_below_diagonal():
    x = QX.symbols()["x"]
    m = NCMatrix.from_rows(QX, [[QX.zero(), QX.one()], [x, QX.zero()]])
    _certify(m, m.inverse())


def _adjugate_inverse(entries, n):
    """Classical adjugate formula, valid over the commutative field Q(n)."""

    def det(rows):
        size = len(rows)
        if size == 1:
            return rows[0][0]
        total = None
        for col in range(size):
            minor = [r[:col] + r[col + 1 :] for r in rows[1:]]
            term = rows[0][col] * det(minor)
            if col % 2:
                term = -term
            total = term if total is None else total + term
        return total

    rows = [entries[r * n : (r + 1) * n] for r in range(n)]
    d = det(rows)
    if d.is_zero():
        return None
    cof = []
    for r in range(n):
        for c in range(n):
            minor = [
                row[:c] + row[c + 1 :] for idx, row in enumerate(rows) if idx != r
            ]
            sign = -1 if (r + c) % 2 else 1
            cof.append(det(minor) * sign if minor else RationalFunction.one(d.var))
    # adjugate is the transposed cofactor matrix
    inv = [cof[c * n + r] * d.inverse() for r in range(n) for c in range(n)]
    return inv


@pytest.mark.parametrize("size", [2, 3])
def test_inverse_matches_adjugate_oracle(size):
    rng = random.Random(400 + size)
    done = 0
    while done < 25:
        entries = [rand_ratfunc(rng, "n") for _ in range(size * size)]
        expected = _adjugate_inverse(entries, size)
        mat = NCMatrix(DIFF1, size, size, tuple(entries))
        if expected is None:
            with pytest.raises(NotInvertible):
                mat.inverse()
            continue
        inv = mat.inverse()
        for r in range(size):
            for c in range(size):
                assert inv.entry(r, c) == expected[r * size + c]
        _certify(mat, inv)
        done += 1
