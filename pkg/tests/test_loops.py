import numpy as np
import pytest

from gyrolab import (
    NotASubloop,
    NotRightLoop,
    NotWellDefined,
    build_gyro,
    catalog_group,
    divide,
    is_normal_subloop,
    is_subloop,
    loop_from_group,
    loop_from_table,
    quotient_loop,
    subloop_generated,
)
from gyrolab.loops import loop_direct_product, normal_subloop_violation


def test_loop_from_group_matches_table(d16):
    L = loop_from_group(d16)
    assert np.array_equal(L.table, d16.table)
    assert L.is_loop


def test_divisions_roundtrip(d16_loop):
    L = d16_loop
    for a in range(L.order):
        for b in range(L.order):
            x = divide(L, "right", a, b)       # x * a == b
            assert L.table[x, a] == b
            y = divide(L, "left", a, b)        # a * y == b
            assert L.table[a, y] == b


def test_strict_rejects_broken_column(d16_loop):
    T = d16_loop.table.copy()
    T[3, 5] = T[4, 5]                          # column 5 repeats a value
    with pytest.raises(NotRightLoop) as exc:
        loop_from_table(T)
    assert exc.value.column == 5


def test_lenient_flags_broken_row(d16_loop):
    # swapping two entries inside a column keeps every column a permutation
    # (right loop survives) but makes rows 1 and 2 repeat values
    T = d16_loop.table.copy()
    T[1, 3], T[2, 3] = T[2, 3], T[1, 3]
    M = loop_from_table(T, lenient=True)
    assert M.is_right_loop
    assert not M.is_loop
    assert M.left_division is None


def test_identity_relocated():
    G = catalog_group("cyclic:4")
    p = np.array([1, 0, 2, 3])
    inv = np.argsort(p)
    moved = p[G.table[np.ix_(inv, inv)]]
    M = loop_from_table(moved)
    assert M.table[0, 2] == 2 and M.table[2, 0] == 2


def test_subloop_generated_rotations(d16, d16_loop):
    S = subloop_generated(d16_loop, [d16.index_of("r")])
    assert sorted(S) == list(range(8))
    assert is_subloop(d16_loop, S)


def test_subloop_membership(d16_loop):
    assert is_subloop(d16_loop, {0, 8})        # {e, s}: s*s = e in the loop
    assert not is_subloop(d16_loop, {0, 1})    # r*r = r2 escapes


def test_normality(d16_loop):
    assert is_normal_subloop(d16_loop, {0, 4})
    # {e, s} is a subloop but its left and right cosets differ at r
    assert normal_subloop_violation(d16_loop, {0, 8}) == ("left-right-coset", 1)
    assert not is_normal_subloop(d16_loop, {0, 8})


def test_quotient_loop_by_commutant(d16_loop):
    Q, proj = quotient_loop(d16_loop, {0, 4})
    assert Q.order == 8
    assert Q.is_loop
    for a in range(16):
        for b in range(16):
            assert proj[d16_loop.table[a, b]] == Q.table[int(proj[a]), int(proj[b])]


def test_quotient_loop_rejects_bad_subsets(d16_loop):
    with pytest.raises(NotASubloop):
        quotient_loop(d16_loop, {0, 1})
    with pytest.raises((NotASubloop, NotWellDefined)):
        quotient_loop(d16_loop, {0, 8})


def test_loop_direct_product():
    A = build_gyro(catalog_group("dihedral:16")).loop
    B = build_gyro(catalog_group("cyclic:3")).loop
    P = loop_direct_product(A, B)
    assert P.order == 48
    assert P.is_loop
    # product works coordinatewise
    assert P.table[1 * 3 + 1, 2 * 3 + 2] == A.table[1, 2] * 3 + B.table[1, 2]
