import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monostab.core import (
    Monomial,
    Ring,
    colon_ideal,
    colon_monomial,
    contains,
    equals,
    factor_gcd,
    from_exps,
    gcd_exps,
    ideal_sum,
    intersect,
    minimalize,
    multiply,
    power,
    principal,
    radical,
    subset,
)
from monostab.decomposition import associated_primes, min_of_monomial
from monostab.errors import ExponentOverflowError, UsageError
from monostab.families import XYZ, example_1_3, theorem_1_4

from conftest import R3, box, exps_strategy, ideals


def I13():
    return example_1_3()


def test_ring_validation():
    with pytest.raises(UsageError):
        Ring(("x", "x"))
    with pytest.raises(UsageError):
        Ring(("1x",))
    with pytest.raises(UsageError):
        Ring(())
    with pytest.raises(UsageError):
        Ring(tuple(f"v{i}" for i in range(17)))
    assert Ring.parse("x, y ,z").variables == ("x", "y", "z")


def test_monomial_arithmetic():
    m = XYZ.monomial("x^2*y")
    n = XYZ.monomial("x*z^3")
    assert str(m * n) == "x^3*y*z^3"
    assert str(m.gcd(n)) == "x"
    assert str(m.lcm(n)) == "x^2*y*z^3"
    assert m.divides(m * n) and not n.divides(m)
    assert str((m * n) / n) == str(m)
    assert (m**3).degree == 9
    with pytest.raises(UsageError):
        m / n


def test_minimalize_examples():
    R = Ring(("x",))
    assert minimalize([R.monomial("x^2"), R.monomial("x^3")]).gens == ((2,),)
    I = I13()
    assert minimalize(I.generators()).gens == I.gens
    assert minimalize([], XYZ).is_zero()


def test_minimalize_rejects_mixed_rings():
    with pytest.raises(UsageError):
        minimalize([XYZ.monomial("x"), Ring(("x", "y")).monomial("x")])


def test_multiply_examples():
    x, y = XYZ.ideal("x"), XYZ.ideal("y")
    assert multiply(x, y) == XYZ.ideal("x*y")
    I = I13()
    # brute-force products then antichain filter
    prods = {tuple(a + b for a, b in zip(g, h)) for g in I.gens for h in I.gens}
    brute = [p for p in prods if not any(q != p and all(s <= t for s, t in zip(q, p)) for q in prods)]
    I2 = multiply(I, I)
    assert sorted(brute) == sorted(I2.gens)
    assert len(I2.gens) == 6 and (4, 4, 0) in I2.gens
    assert multiply(XYZ.unit_ideal(), I) == I


def test_overflow_is_a_hard_error():
    big = XYZ.monomial({"x": 2**62})
    with pytest.raises(ExponentOverflowError):
        multiply(principal(big), principal(big))


def test_power_examples():
    I = I13()
    assert power(I, 0) == XYZ.unit_ideal()
    assert power(I, 1) == I
    assert power(XYZ.ideal("x,y"), 2) == XYZ.ideal("x^2, x*y, y^2")
    c = 2
    expected = XYZ.ideal(
        [
            {"x": 4 * c + 4},
            {"x": 2, "y": 4 * c, "z": 2},
            {"y": 4 * c + 4, "z": 2},
            {"x": 2 * c + 3, "y": 2 * c, "z": 1},
            {"x": 2 * c + 2, "y": 2 * c + 2, "z": 1},
            {"x": 1, "y": 4 * c + 2, "z": 2},
        ]
    )
    assert power(theorem_1_4(c), 2) == expected


def test_colon_monomial_examples():
    assert colon_monomial(XYZ.ideal("x^2*y"), XYZ.monomial("x")) == XYZ.ideal("x*y")
    I = I13()
    assert colon_monomial(I, XYZ.one()) == I
    n = 3
    lhs = colon_monomial(power(I, n), XYZ.monomial("x^2*y^2"))
    rhs = ideal_sum(power(I, n - 1), multiply(principal(XYZ.monomial({"z": 2 * n})), power(XYZ.ideal("x^2, y^2"), n - 2)))
    assert lhs == rhs


def test_colon_ideal_examples():
    I = I13()
    for n in (2, 3, 4):
        assert colon_ideal(power(I, n), I) == power(I, n - 1)
    T = theorem_1_4(2)
    for n in (2, 3):
        assert colon_ideal(power(T, n), T) == power(T, n - 1)
    assert colon_ideal(I, I) == XYZ.unit_ideal()
    with pytest.raises(UsageError):
        colon_ideal(I, XYZ.zero_ideal())


def test_intersect_examples():
    assert intersect(XYZ.ideal("x"), XYZ.ideal("y")) == XYZ.ideal("x*y")
    c = 2
    a = XYZ.ideal([{"x": 2 * c + 2}, {"z": 1}])
    b = XYZ.ideal([{"x": 1}, {"y": 2 * c + 2}])
    d = XYZ.ideal([{"y": 2 * c}, {"x": 2 * c + 2}])
    assert intersect(intersect(a, b), d) == theorem_1_4(c)
    I = I13()
    assert intersect(I, XYZ.unit_ideal()) == I
    assert intersect(I, XYZ.zero_ideal()).is_zero()


def test_containment_examples():
    R = Ring(("x", "y"))
    assert contains(R.ideal("x^2"), R.monomial("x^2*y"))
    c = 2
    T = theorem_1_4(c)
    assert not contains(power(T, 2), XYZ.monomial({"x": 2 * c + 2, "y": 2 * c + 1, "z": 1}))
    assert equals(power(T, 2), multiply(T, T))
    assert subset(power(T, 2), T) and not subset(T, power(T, 2))


def test_factor_gcd_examples():
    f, J = factor_gcd(XYZ.ideal("x^2*y, x^2*z"))
    assert str(f) == "x^2" and J == XYZ.ideal("y, z")
    I = I13()
    f, J = factor_gcd(I)
    assert f.is_one() and J == I
    f, J = factor_gcd(XYZ.ideal("x^3*y^2*z, x^3*y^4, x^4*y^2"))
    assert str(f) == "x^3*y^2" and J == XYZ.ideal("z, y^2, x")
    with pytest.raises(UsageError):
        factor_gcd(XYZ.zero_ideal())


def test_radical_examples():
    R = Ring(("x", "y"))
    assert radical(R.ideal("x^2*y^4")) == R.ideal("x*y")
    assert radical(I13()) == XYZ.ideal("x*y, x*z, y*z")
    assert radical(XYZ.unit_ideal()) == XYZ.unit_ideal()


# -- properties --------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(ideals(), st.integers(2, 3))
def test_persistence_containment(I, n):
    assert subset(power(I, n - 1), colon_ideal(power(I, n), I))


@settings(max_examples=60, deadline=None)
@given(ideals(), ideals(), ideals())
def test_multiply_commutative_associative(I, J, K):
    assert multiply(I, J) == multiply(J, I)
    assert multiply(multiply(I, J), K) == multiply(I, multiply(J, K))


@settings(max_examples=40, deadline=None)
@given(ideals(), st.integers(0, 2), st.integers(0, 2))
def test_power_additive(I, a, b):
    assert power(I, a + b) == multiply(power(I, a), power(I, b))


@settings(max_examples=80, deadline=None)
@given(ideals(), exps_strategy(3, 7))
def test_colon_truncation(I, m):
    top = I.max_exponents()
    trunc = tuple(min(a, t) for a, t in zip(m, top))
    assert colon_monomial(I, Monomial(R3, m)) == colon_monomial(I, Monomial(R3, trunc))


@settings(max_examples=60, deadline=None)
@given(ideals(), exps_strategy(3, 4))
def test_colon_membership_oracle(I, m):
    # u is in I:m exactly when u*m is in I; check on a box of candidates
    Q = colon_monomial(I, Monomial(R3, m))
    for u in box(I.max_exponents()):
        assert Q.contains_exps(u) == I.contains_exps(tuple(a + b for a, b in zip(u, m)))


@settings(max_examples=60, deadline=None)
@given(ideals(), ideals())
def test_intersect_bounds(I, J):
    K = intersect(I, J)
    assert subset(K, I) and subset(K, J)
    assert subset(multiply(I, J), K)
    for u in box(tuple(max(a, b) for a, b in zip(I.max_exponents(), J.max_exponents()))):
        assert K.contains_exps(u) == (I.contains_exps(u) and J.contains_exps(u))


@settings(max_examples=60, deadline=None)
@given(ideals())
def test_factor_gcd_round_trip(I):
    f, J = factor_gcd(I)
    assert multiply(principal(f), J) == I
    assert gcd_exps(J.gens) == (0, 0, 0)
    # componentwise-minimum oracle
    assert f.exponents == tuple(min(g[j] for g in I.gens) for j in range(3))


@settings(max_examples=30, deadline=None)
@given(ideals(max_gens=3, max_exp=2), exps_strategy(3, 2), st.integers(1, 2))
def test_ass_scaling_identity(J, fe, k):
    f = Monomial(R3, fe)
    lhs = associated_primes(multiply(principal(f**k), power(J, k)))
    assert lhs == min_of_monomial(f) | associated_primes(power(J, k))


def test_canonical_form_is_order_independent():
    a = from_exps(XYZ, [(0, 1, 2), (2, 0, 0), (1, 1, 0), (2, 1, 0)])
    b = from_exps(XYZ, [(1, 1, 0), (0, 1, 2), (2, 0, 0)])
    assert a == b and a.gens == b.gens
    assert list(a.gens) == sorted(a.gens)
