import pytest
from hypothesis import given, settings

from monostab.core import Ring, colon_monomial, power
from monostab.decomposition import full_support, potential_ass
from monostab.errors import UsageError
from monostab.families import XYZ, example_1_3, example_2_1, hibi, theorem_1_4, theorem_2_3
from monostab.stability import (
    CERTIFIED,
    OBSERVED,
    depth_monotonicity,
    dim2_check,
    dim3_astab_eq_dstab_check,
    profile,
    settled_index,
    strong_persistence,
)

from conftest import R3, ideals


def test_settled_index():
    assert settled_index([1, 0, 0, 0]) == 2
    assert settled_index([3, 3, 3]) == 1
    assert settled_index([1, 1, 0]) is None  # a change at the last power is not settled


def test_profile_example_1_3():
    rep = profile(example_1_3(), 5, with_closure=True)
    assert rep.astab_observed == 2 and rep.astabbar_observed == 1 and rep.dstab_observed == 2
    assert rep.certification["astab"].level == CERTIFIED
    assert rep.depth_profile() == [1, 0, 0, 0, 0]


def test_profile_example_2_1():
    rep = profile(example_2_1(), 5)
    assert rep.astab_observed == 1 and rep.dstab_observed == 2
    assert rep.depth_profile() == [2, 1, 1, 1, 1]


def test_profile_theorem_2_3_pair():
    I, J = theorem_2_3(2)
    rI, rJ = profile(I, 6), profile(J, 6)
    assert (rI.astab_observed, rI.dstab_observed) == (3, 1)
    assert (rJ.astab_observed, rJ.dstab_observed) == (1, 3)


def test_profile_needs_horizon_two():
    with pytest.raises(UsageError):
        profile(example_1_3(), 1)
    with pytest.raises(UsageError):
        profile(XYZ.unit_ideal(), 3)


def test_strong_persistence_examples():
    assert strong_persistence(example_1_3(), 5) == [True] * 4
    _, J = theorem_2_3(2)
    assert all(strong_persistence(J, 4))
    assert strong_persistence(XYZ.ideal("x"), 4) == [True] * 3


def test_theorem_1_4_unit_colon():
    for c in (1, 2):
        I = theorem_1_4(c)
        g = XYZ.monomial({"x": 2 * c + 2})
        for n in range(2, c + 2):
            assert colon_monomial(power(I, n), g) == power(I, n - 1)


def test_depth_monotonicity_examples():
    v = depth_monotonicity(example_2_1(), 4)
    assert v.non_increasing and v.profile == [2, 1, 1, 1]
    assert depth_monotonicity(example_1_3(), 4, on_closure=True).non_increasing


def test_dim2_examples():
    R = Ring(("x", "y"))
    assert dim2_check(R.ideal("x^2*y, x*y^3"), 4)
    assert dim2_check(R.ideal("x^4"), 4)
    with pytest.raises(UsageError):
        dim2_check(example_1_3(), 4)


def test_dim3_examples():
    v = dim3_astab_eq_dstab_check(example_1_3(), 5)
    assert v.status == "equal" and v.astab == v.dstab == 2
    v = dim3_astab_eq_dstab_check(hibi(3), 6)
    assert v.status == "equal" and v.astab == v.dstab == 3


def test_jobs_do_not_change_records():
    a = profile(theorem_1_4(1), 5, with_closure=True, jobs=1)
    b = profile(theorem_1_4(1), 5, with_closure=True, jobs=3)
    strip = lambda r: (r.n, r.num_generators, r.ass, r.depth, r.closure_ass, r.closure_depth, r.strong_persistence)
    assert [strip(r) for r in a.records] == [strip(r) for r in b.records]
    assert a.certification == b.certification


@settings(max_examples=25, deadline=None)
@given(ideals(max_gens=3, max_exp=2))
def test_record_invariants(I):
    rep = profile(I, 4, with_closure=True)
    pot = potential_ass(I)
    full = full_support(I.ring)
    for r in rep.records:
        assert r.ass <= pot and r.closure_ass <= pot
        assert 0 <= r.depth <= I.n
        assert (r.depth == 0) == (full in r.ass)
    for a, b in zip(rep.records, rep.records[1:]):
        if a.strong_persistence:
            assert a.ass <= b.ass
    for key, cert in rep.certification.items():
        assert cert.level in (OBSERVED, "conditional", CERTIFIED) and cert.reason
