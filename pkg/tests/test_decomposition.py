import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monostab.core import Monomial, Ring, intersect, multiply, power, principal, radical
from monostab.decomposition import (
    PrimeSupport,
    ass_witness,
    associated_primes,
    height,
    irreducible_decomposition,
    minimal_primes,
    potential_ass,
)
from monostab.errors import UsageError
from monostab.families import XYZ, XYZU, example_1_3, example_2_1, theorem_1_4, theorem_2_3

from conftest import R3, exps_strategy, ideals


def P(ring, text):
    return PrimeSupport.of(ring, text)


def brute_components(I):
    """Inclusion-minimal irreducible ideals containing I, exponents bounded by I's maxima."""
    top = I.max_exponents()
    cands = []
    for e in itertools.product(*(range(t + 1) for t in top)):
        if not any(e):
            continue
        # x_i^{e_i} generators; I is inside iff each generator is divisible by one of them
        if all(any(a and g[i] >= a for i, a in enumerate(e)) for g in I.gens):
            cands.append(e)

    def inside(a, b):  # (a) ⊆ (b)
        return all(not x or (y and y <= x) for x, y in zip(a, b))

    return {a for a in cands if not any(b != a and inside(b, a) for b in cands)}


def brute_covers(I):
    n = I.n
    out = set()
    for r in range(1, n + 1):
        for S in itertools.combinations(range(n), r):
            if all(any(g[i] for i in S) for g in I.gens):
                out.add(PrimeSupport(I.ring, S))
    return out


def test_prime_support_declaration_order():
    p = P(XYZU, "u,x")
    assert p.vars == ("x", "u") and str(p) == "(x,u)"
    with pytest.raises(UsageError):
        PrimeSupport(XYZ, ())


def test_decomposition_theorem_1_4():
    comps = irreducible_decomposition(theorem_1_4(2))
    got = {tuple(sorted(q.entries.items())) for q in comps}
    assert got == {(("x", 6), ("z", 1)), (("x", 1), ("y", 6)), (("x", 6), ("y", 4))}


def test_decomposition_small_examples():
    R = Ring(("x",))
    assert [q.entries for q in irreducible_decomposition(R.ideal("x^2"))] == [{"x": 2}]
    comps = irreducible_decomposition(XYZ.ideal("x*y, x*z, y*z"))
    assert {q.exponents for q in comps} == brute_components(XYZ.ideal("x*y, x*z, y*z"))
    assert {str(q.support) for q in comps} == {"(x,y)", "(x,z)", "(y,z)"}


def test_decomposition_rejects_trivial_ideals():
    with pytest.raises(UsageError):
        irreducible_decomposition(XYZ.zero_ideal())
    with pytest.raises(UsageError):
        associated_primes(XYZ.unit_ideal())


def test_ass_examples():
    I = example_1_3()
    three = {P(XYZ, "x,y"), P(XYZ, "x,z"), P(XYZ, "y,z")}
    assert associated_primes(I) == three
    assert associated_primes(power(I, 2)) == three | {P(XYZ, "x,y,z")}
    for c in (2, 3):  # the family needs c >= 2
        Ic, _ = theorem_2_3(c)
        want = {P(XYZU, s) for s in ("x,u", "z,u", "y,z,u", "x,y,u")}
        assert associated_primes(Ic) == want
    assert associated_primes(XYZ.ideal("y^5")) == {P(XYZ, "y")}


def test_min_and_height_examples():
    _, J = theorem_2_3(2)
    assert minimal_primes(J) == {P(XYZU, s) for s in ("x,z", "x,u", "y,z", "y,u")}
    R = Ring(("x", "y"))
    I = R.ideal("x^2*y^3")
    assert minimal_primes(I) == {P(R, "x"), P(R, "y")} and height(I) == 1
    E = example_1_3()
    covers = brute_covers(E)
    mins = {p for p in covers if not any(q != p and q.issubset(p) for q in covers)}
    assert minimal_primes(E) == mins
    assert height(E) == min(len(p) for p in mins) == 2


def test_potential_ass_examples():
    assert potential_ass(example_1_3()) == {P(XYZ, s) for s in ("x,y", "x,z", "y,z", "x,y,z")}
    assert potential_ass(XYZ.ideal("x")) == {p for p in brute_covers(XYZ.ideal("x"))}
    assert all("x" in p.vars for p in potential_ass(XYZ.ideal("x")))
    E = example_2_1()
    assert potential_ass(E) == brute_covers(E)


def test_ass_witness_examples():
    c = 1
    I3 = power(theorem_1_4(c), c + 2)
    m = P(XYZ, "x,y,z")
    u = XYZ.monomial({"x": 2 * c + 2, "y": (c + 1) * (2 * c + 2) - 1, "z": c + 1})
    assert u not in I3 and all(u * XYZ.var(v) in I3 for v in "xyz")
    assert ass_witness(I3, m) is not None
    w = ass_witness(XYZ.ideal("x"), P(XYZ, "x"))
    assert w is not None and w.is_one()
    w = ass_witness(power(example_1_3(), 2), m)
    assert w is not None
    assert (power(example_1_3(), 2)).colon(principal(w)) == m.ideal()


# -- properties --------------------------------------------------------------


@settings(max_examples=80, deadline=None)
@given(ideals(max_gens=5, max_exp=3))
def test_decomposition_matches_brute_force(I):
    comps = irreducible_decomposition(I)
    assert {q.exponents for q in comps} == brute_components(I)


@settings(max_examples=80, deadline=None)
@given(ideals(max_gens=5, max_exp=3))
def test_decomposition_is_exact_and_irredundant(I):
    comps = [q.ideal() for q in irreducible_decomposition(I)]
    inter = comps[0]
    for Q in comps[1:]:
        inter = intersect(inter, Q)
    assert inter == I
    if len(comps) > 1:
        for k in range(len(comps)):
            rest = comps[:k] + comps[k + 1 :]
            acc = rest[0]
            for Q in rest[1:]:
                acc = intersect(acc, Q)
            assert acc != I


@settings(max_examples=80, deadline=None)
@given(ideals(max_gens=5, max_exp=3))
def test_min_ass_potential_chain(I):
    mins, ass, pot = minimal_primes(I), associated_primes(I), potential_ass(I)
    assert mins <= ass <= pot
    assert pot == brute_covers(I)
    assert associated_primes(radical(I)) == minimal_primes(radical(I)) == mins


@settings(max_examples=60, deadline=None)
@given(ideals(max_gens=4, max_exp=3))
def test_ass_agrees_with_witness_oracle(I):
    ass = associated_primes(I)
    for P_ in potential_ass(I):
        w = ass_witness(I, P_)
        assert (w is not None) == (P_ in ass)
        if w is not None:
            assert I.colon(principal(w)) == P_.ideal()


@settings(max_examples=40, deadline=None)
@given(ideals(max_gens=4, max_exp=2), exps_strategy(3, 2))
def test_scaling_adds_variable_primes(I, fe):
    if height(I) < 2:
        return
    f = Monomial(R3, fe)
    singles = {PrimeSupport(R3, (i,)) for i, e in enumerate(fe) if e}
    assert associated_primes(multiply(principal(f), I)) == singles | associated_primes(I)
