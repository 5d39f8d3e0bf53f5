import numpy as np
import pytest

from gyrolab import (
    build_gyro,
    catalog_group,
    inner_mapping_group,
    is_inner_abelian,
    kinyon_check,
    loop_from_group,
    mlt_inn_orders,
    multiplication_group,
)
from gyrolab.mappings import (
    bracket_associativity_violation,
    inner_generators,
    translations,
)


def test_translations_regular_representation():
    G = catalog_group("cyclic:4")
    L = loop_from_group(G)
    left, right = translations(L, 1)
    # for an abelian group left and right translations coincide
    assert np.array_equal(left, right)
    assert list(left) == [1, 2, 3, 0]
    M = multiplication_group(L)
    assert M.order() == 4


def test_inner_generators_fix_identity(d16_loop):
    gens, labels = inner_generators(d16_loop)
    assert len(gens) == len(labels)
    for g in gens:
        assert g[0] == 0


def test_group_inner_mappings_are_conjugations(d16):
    # for a group table the inner mapping group is G / Z(G)
    L = loop_from_group(d16)
    inn = inner_mapping_group(L)
    assert inn.order() == 8            # 16 / |{e, r4}|


def test_orbit_transitive(d16_loop):
    M = multiplication_group(d16_loop)
    assert M.orbit_of(0) == frozenset(range(16))


def test_mlt_inn_orbit_stabilizer(d16_loop):
    mlt, inn = mlt_inn_orders(d16_loop)
    assert (mlt, inn) == (256, 16)
    assert mlt == 16 * inn


def test_inner_abelian_verdicts(d16_loop, heis3_loop):
    flag, wit = is_inner_abelian(d16_loop)
    assert flag is False
    assert wit == ("T(1)", "T(8)")
    flag3, wit3 = is_inner_abelian(heis3_loop)
    assert flag3 is True and wit3 is None


def test_bracket_associativity(d16_loop, heis3_loop):
    assert bracket_associativity_violation(d16_loop) == (1, 8, 8)
    assert bracket_associativity_violation(heis3_loop) is None


def test_kinyon_conditions_d16(d16_loop):
    reports = kinyon_check(d16_loop)
    by_id = {r.check_id: r for r in reports}
    assert by_id["kinyon-quotient-by-nucleus-abelian-group"].status == "pass"
    assert by_id["kinyon-quotient-by-center-group"].status == "pass"
    assert by_id["kinyon-bracket-associative"].status == "fail"
    assert by_id["kinyon-bracket-associative"].witness == (1, 8, 8)
    assert by_id["kinyon-inner-abelian"].status == "fail"


def test_kinyon_conditions_heis3(heis3_loop):
    assert all(r.status == "pass" for r in kinyon_check(heis3_loop))
