"""Reproduction suite: one row per claimed value for each ideal family.

Rows carry the expected value as stated for the family, the computed
value, and whether they match. Property rows (random ideals) report the
number of instances that broke the property, expected 0.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from functools import reduce

from .closure import NewtonSystem, integral_closure, np_member
from .core import (
    MonomialIdeal,
    Ring,
    colon_ideal,
    colon_monomial,
    from_exps,
    ideal_sum,
    intersect,
    multiply,
    power,
    principal,
)
from .decomposition import (
    PrimeSupport,
    ass_witness,
    associated_primes,
    full_support,
    irreducible_decomposition,
    min_of_monomial,
    minimal_primes,
    potential_ass,
    sorted_primes,
)
from .families import (
    XYZ,
    example_1_3,
    example_2_1,
    example_2_2,
    hibi,
    random_ideal,
    theorem_1_4,
    theorem_2_3,
)
from .resolution import betti_table, depth
from .stability import (
    CERTIFIED,
    depth_monotonicity,
    dim2_check,
    dim3_astab_eq_dstab_check,
    profile,
)

DEFAULT_C = (1, 2, 3)
RANDOM_INSTANCES = 50


@dataclass
class SuiteRow:
    family: str
    parameter: str
    claim: str
    expected: str
    computed: str
    passed: bool

    def as_dict(self):
        return asdict(self)


def fmt(value) -> str:
    if isinstance(value, MonomialIdeal):
        return str(value)
    if isinstance(value, (set, frozenset)):
        items = list(value)
        if items and all(isinstance(p, PrimeSupport) for p in items):
            return "{" + ", ".join(str(p) for p in sorted_primes(items)) + "}"
        return "{" + ", ".join(sorted(str(v) for v in items)) + "}"
    if isinstance(value, (list, tuple)):
        return "(" + ",".join(fmt(v) for v in value) + ")"
    return str(value)


class _Rows:
    def __init__(self, family, parameter=""):
        self.family = family
        self.parameter = parameter
        self.rows = []

    def check(self, claim, expected, computed):
        self.rows.append(
            SuiteRow(self.family, self.parameter, claim, fmt(expected), fmt(computed), expected == computed)
        )


def _primes(ring, *groups):
    return frozenset(PrimeSupport.of(ring, g) for g in groups)


def _is_socle_witness(I: MonomialIdeal, u) -> bool:
    """u ∉ I and u * x_j ∈ I for every variable."""
    if u in I:
        return False
    return all(u * I.ring.var(v) in I for v in I.ring.variables)


class _Profiles:
    """Memo so each (ideal, horizon, closure) profile is computed once."""

    def __init__(self, jobs=1):
        self.jobs = jobs
        self.memo = {}

    def get(self, I, N, closure=False):
        key = (I, N, closure)
        if key not in self.memo:
            # a closure profile also answers the plain question
            alt = self.memo.get((I, N, True))
            self.memo[key] = alt if alt is not None else profile(I, N, closure, self.jobs)
        return self.memo[key]


def example_1_3_rows(N, profiles) -> list:
    I = example_1_3()
    R = I.ring
    r = _Rows("Example 1.3")
    r.check("generators already minimal", 3, len(I.gens))
    for n in range(2, N + 1):
        xy2 = R.monomial("x^2*y^2")
        rhs = ideal_sum(power(I, n - 1), multiply(principal(R.var("z", 2 * n)), power(R.ideal("x^2, y^2"), n - 2)))
        r.check(f"I^{n} : (xy)^2 = I^{n-1} + z^{2*n}(x^2,y^2)^{n-2}", rhs, colon_monomial(power(I, n), xy2))
        r.check(f"I^{n} : I = I^{n-1}", power(I, n - 1), colon_ideal(power(I, n), I))
    r.check("Ass(I)", _primes(R, "x,y", "x,z", "y,z"), associated_primes(I))
    r.check("Ass(I^2)", _primes(R, "x,y", "x,z", "y,z", "x,y,z"), associated_primes(power(I, 2)))
    r.check("monomial primes containing I", _primes(R, "x,y", "x,z", "y,z", "x,y,z"), potential_ass(I))
    closure_gens = R.ideal("x^2*y^2, x^2*z^2, y^2*z^2, x*y*z^2, x*y^2*z, x^2*y*z")
    C = integral_closure(I, 1)
    r.check("closure(I) generators", closure_gens, C)
    r.check("x*y*z^2 in closure(I)", True, np_member((1, 1, 2), NewtonSystem.of(I, 1)))
    r.check("Ass(closure(I))", _primes(R, "x,y", "x,z", "y,z", "x,y,z"), associated_primes(C))
    rep = profiles.get(I, N, True)
    r.check("astab(I)", 2, rep.astab_observed)
    r.check("dstab(I)", 2, rep.dstab_observed)
    r.check("astab-bar(I)", 1, rep.astabbar_observed)
    r.check("strong persistence for n < horizon", True, all(rep.persistence_flags()))
    r.check("astab certified", CERTIFIED, rep.certification["astab"].level)
    r.check("astab-bar certified", CERTIFIED, rep.certification["astabbar"].level)
    r.check("dim3: astab = dstab", "equal", dim3_astab_eq_dstab_check(I, N, rep).status)
    return r.rows


def theorem_1_4_rows(c, N, profiles) -> list:
    I = theorem_1_4(c)
    R = I.ring
    r = _Rows("Theorem 1.4", f"c={c}")
    X = lambda **e: R.monomial(e)  # noqa: E731
    sq = R.ideal(
        [
            {"x": 4 * c + 4},
            {"x": 2, "y": 4 * c, "z": 2},
            {"y": 4 * c + 4, "z": 2},
            {"x": 2 * c + 3, "y": 2 * c, "z": 1},
            {"x": 2 * c + 2, "y": 2 * c + 2, "z": 1},
            {"x": 1, "y": 4 * c + 2, "z": 2},
        ]
    )
    r.check("I^2 generators", sq, power(I, 2))
    comps = [
        R.ideal([{"x": 2 * c + 2}, {"z": 1}]),
        R.ideal([{"x": 1}, {"y": 2 * c + 2}]),
        R.ideal([{"y": 2 * c}, {"x": 2 * c + 2}]),
    ]
    r.check("I = (x^{2c+2},z) ∩ (x,y^{2c+2}) ∩ (y^{2c},x^{2c+2})", I, reduce(intersect, comps))
    r.check(
        "irreducible components",
        frozenset(str(q) for q in comps),
        frozenset(str(q.ideal()) for q in irreducible_decomposition(I)),
    )
    r.check("dim R/I = depth R/I = 1", (1, 1), (3 - min(len(p) for p in minimal_primes(I)), depth(I)))
    x_pow = X(x=2 * c + 2)
    for n in range(2, c + 2):
        r.check(f"I^{n} : x^(2c+2) = I^{n-1}", power(I, n - 1), colon_monomial(power(I, n), x_pow))
    for n in range(1, N + 1):
        tail = power(R.ideal("x, y^2"), max(0, n - 2 * (c + 1)))
        extra = multiply(principal(X(y=2 * c * n, z=n)), tail)
        expected = ideal_sum(power(I, n - 1), extra)
        r.check(
            f"I^{n} : x^(2c+2) = I^{n-1} + (y^(2c)z)^{n}(x,y^2)^{n}-2(c+1)",
            expected,
            colon_monomial(power(I, n), x_pow),
        )
    for n in range(2, c + 4):
        r.check(f"I^{n} : I = I^{n-1}", power(I, n - 1), colon_ideal(power(I, n), I))
    u = X(x=2 * c + 2, y=(c + 1) * (2 * c + 2) - 1, z=c + 1)
    Ic2 = power(I, c + 2)
    r.check(f"u = {u} is a socle witness of I^{c+2}", True, _is_socle_witness(Ic2, u))
    r.check(f"I^{c+2} : u = (x,y,z)", R.ideal("x,y,z"), colon_monomial(Ic2, u))
    r.check("witness scan finds (x,y,z) for I^(c+2)", True, ass_witness(Ic2, full_support(R)) is not None)
    bad = X(x=2 * c + 2, y=2 * c + 1, z=1)
    r.check(f"{bad} not in I^2", False, bad in power(I, 2))
    r.check(f"{bad} not in closure(I^2)", False, np_member(bad.exponents, NewtonSystem.of(I, 2)))

    rep = profiles.get(I, N, True)
    r.check("depth profile", tuple([1] * (c + 1) + [0] * (N - c - 1)), tuple(rep.depth_profile()))
    r.check("astab(I) = c+2", c + 2, rep.astab_observed)
    r.check("astab certified", CERTIFIED, rep.certification["astab"].level)
    r.check("dstab(I) = c+2", c + 2, rep.dstab_observed)
    r.check("astab-bar(I) = 2", 2, rep.astabbar_observed)
    r.check("strong persistence for n < horizon", True, all(rep.persistence_flags()))

    closure_extra = [{"x": i, "y": 2 * c + 2 - i, "z": 1} for i in range(3, 2 * c + 2)]
    C1 = integral_closure(I, 1)
    r.check("closure(I) = I + (x^i y^(2c+2-i) z : 3 <= i <= 2c+1)", ideal_sum(I, R.ideal(closure_extra)), C1)
    r.check("Ass(closure(I))", _primes(R, "x,z", "x,y"), associated_primes(C1))
    stable = _primes(R, "x,z", "x,y", "x,y,z")
    r.check(
        "Ass(closure(I^k)) for 2 <= k <= horizon",
        tuple([stable] * (N - 1)),
        tuple(rep.closure_ass_profile()[1:]),
    )
    r.check("(x,y,z) in Ass(closure(I^2))", True, full_support(R) in rep.records[1].closure_ass)

    L = ideal_sum(
        power(I, 2),
        R.ideal(
            [{"x": i, "y": 4 * c + 3 - i, "z": 2} for i in range(4, 2 * c + 3)]
            + [{"x": 2 * c + j, "y": 2 * c + 4 - j, "z": 1} for j in range(5, 2 * c + 4)]
        ),
    )
    C2 = integral_closure(I, 2)
    r.check("L ⊆ closure(I^2)", True, all(C2.contains_exps(g) for g in L.gens))
    r.check("Ass(L)", stable, associated_primes(L))
    r.check(f"L : {bad} = (x,y,z)", R.ideal("x,y,z"), colon_monomial(L, bad))
    r.check(
        "depth of closures non-increasing",
        True,
        all(a >= b for a, b in zip(rep.closure_depth_profile(), rep.closure_depth_profile()[1:])),
    )
    return r.rows


def example_2_1_rows(N, profiles) -> list:
    R = Ring(("x", "y", "z", "u"))
    I = R.ideal("x*y, y*z, z*u")
    r = _Rows("Example 2.1")
    r.check("parse 'x*y, y*z, z*u'", example_2_1(), I)
    r.check("Ass(I) = Min(I)", minimal_primes(I), associated_primes(I))
    r.check("pd R/I", 2, betti_table(I).projdim)
    r.check("pd R/I^2", 3, betti_table(power(I, 2)).projdim)
    rep = profiles.get(I, N)
    r.check("depth profile", tuple([2] + [1] * (N - 1)), tuple(rep.depth_profile()))
    r.check("astab(I)", 1, rep.astab_observed)
    r.check("dstab(I)", 2, rep.dstab_observed)
    r.check("limit depth", 1, rep.limit_depth)
    r.check("depth non-increasing", True, depth_monotonicity(I, N).non_increasing)
    return r.rows


def example_2_2_rows(N, profiles) -> list:
    I = example_2_2()
    R = I.ring
    r = _Rows("Example 2.2")
    x2z = R.monomial("x^2*z")
    for n in range(2, N + 1):
        r.check(f"I^{n} : x^2z = I^{n-1}", power(I, n - 1), colon_monomial(power(I, n), x2z))
    rep = profiles.get(I, N)
    r.check("Ass^∞(I) = Ass(I^2)", _primes(R, "x,u", "z,u", "x,y,u", "x,z,u"), rep.ass_infinity)
    r.check("Ass(I^2)", _primes(R, "x,u", "z,u", "x,y,u", "x,z,u"), rep.records[1].ass)
    r.check("astab(I)", 2, rep.astab_observed)
    r.check("dstab(I)", 1, rep.dstab_observed)
    r.check("depth profile", tuple([1] * N), tuple(rep.depth_profile()))
    r.check("(x,y,z,u) never associated", False, any(full_support(R) in a for a in rep.ass_profile()))
    S = Ring(("x", "z", "u"))
    A = S.ideal("x^2*z, u*z^2, u^3")
    for n in range(1, 4):
        w = S.monomial({"x": 1, "z": 1, "u": 3 * n - 1})
        r.check(f"x*z*u^{3*n-1} is a socle witness mod y-z, n={n}", True, _is_socle_witness(power(A, n), w))
    return r.rows


def theorem_2_3_rows(c, N, profiles) -> list:
    I, J = theorem_2_3(c)
    R = I.ring
    r = _Rows("Theorem 2.3", f"c={c}")
    g = R.monomial({"x": c + 1, "z": c})
    for n in range(2, N + 1):
        r.check(f"I^{n} : x^(c+1)z^c = I^{n-1}", power(I, n - 1), colon_monomial(power(I, n), g))
    r.check("Ass(I)", _primes(R, "x,u", "z,u", "y,z,u", "x,y,u"), associated_primes(I))
    rep = profiles.get(I, N)
    r.check("Ass^∞(I)", _primes(R, "x,u", "z,u", "y,z,u", "x,z,u", "x,y,u"), rep.ass_infinity)
    r.check("Ass(I^i) = Ass(I) for i <= c", tuple([associated_primes(I)] * c), tuple(rep.ass_profile()[:c]))
    r.check("astab(I) = c+1", c + 1, rep.astab_observed)
    r.check("dstab(I) = 1", 1, rep.dstab_observed)
    r.check("depth R/I^n = 1", tuple([1] * N), tuple(rep.depth_profile()))
    # (x,z,u)-socle witness after inverting y
    loc = from_exps(R, [(a, 0, e, d) for a, _, e, d in power(I, c + 1).gens])
    w = R.monomial({"x": c, "z": c, "u": (2 * c + 1) * c})
    p_vars = ("x", "z", "u")
    r.check(
        "x^c y^(c+1) z^c u^((2c+1)c) is a (x,z,u)-socle element of I^(c+1) localized",
        True,
        w not in loc and all(w * R.var(v) in loc for v in p_vars),
    )

    zu = R.monomial({"z": c, "u": c})
    for n in range(2, N + 1):
        r.check(f"J^{n} : z^c u^c = J^{n-1}", power(J, n - 1), colon_monomial(power(J, n), zu))
    minJ = _primes(R, "x,z", "x,u", "y,z", "y,u")
    r.check("Min(J)", minJ, minimal_primes(J))
    repJ = profiles.get(J, N)
    r.check("Ass^∞(J) = Min(J)", minJ, repJ.ass_infinity)
    r.check("astab(J) = 1", 1, repJ.astab_observed)
    r.check("dstab(J) = c+1", c + 1, repJ.dstab_observed)
    r.check("depth R/J^n: 2 for n <= c, then 1", tuple([2] * c + [1] * (N - c)), tuple(repJ.depth_profile()))
    r.check("strong persistence of J", True, all(repJ.persistence_flags()))
    S = Ring(("x", "z", "u"))
    A = S.ideal([{"x": 2 * c - 1}, {"x": 2 * c - 2, "z": 1}, {"z": c, "u": c}])
    r.check(
        "depth mod x-y: 1 for n <= c, then 0",
        tuple([1] * c + [0] * (N - c)),
        tuple(depth(power(A, n)) for n in range(1, N + 1)),
    )
    return r.rows


def theorem_1_2_rows(N, profiles, instances) -> list:
    r = _Rows("Theorem 1.2")
    rep = profiles.get(example_1_3(), 5, True)
    r.check("Example 1.3: astab = dstab", (2, 2), (rep.astab_observed, rep.dstab_observed))
    H = hibi(3)
    repH = profiles.get(H, 6)
    r.check("(x^3, xyz, y^2z): astab = dstab = 3", (3, 3), (repH.astab_observed, repH.dstab_observed))
    # Ass(f^k J^k) = Min(f) ∪ Ass(J^k) and depth(fJ) = depth(J)
    f = XYZ.monomial("x*y^2")
    J = example_1_3()
    for k in (1, 2):
        lhs = associated_primes(multiply(principal(f**k), power(J, k)))
        r.check(f"Ass(f^{k}J^{k}) = Min(f) ∪ Ass(J^{k}), f=xy^2", min_of_monomial(f) | associated_primes(power(J, k)), lhs)
    r.check("depth R/fJ = depth R/J", depth(J), depth(multiply(principal(f), J)))
    r.check("random 3-variable ideals: settled astab != dstab", 0, len(dim3_failures(instances, N)))
    return r.rows


def remark_1_1_rows(N, instances) -> list:
    R = Ring(("x", "y"))
    r = _Rows("Remark 1.1")
    r.check("(x^2y, xy^3): all indices 1", True, dim2_check(R.ideal("x^2*y, x*y^3"), N))
    r.check("(x^3): all indices 1", True, dim2_check(R.ideal("x^3"), N))
    r.check("random 2-variable ideals: an index differs from 1", 0, len(dim2_failures(instances, N)))
    return r.rows


def theorem_3_1_rows(N, profiles, c_values, instances) -> list:
    r = _Rows("Theorem 3.1")
    fams = [("Example 1.3", example_1_3())] + [(f"Theorem 1.4 c={c}", theorem_1_4(c)) for c in c_values]
    for name, I in fams:
        rep = profiles.get(I, N)
        r.check(f"{name}: strong persistence for n < {N}", True, all(rep.persistence_flags()))
        r.check(f"{name}: depth non-increasing", True, depth_monotonicity(I, N).non_increasing)
    r.check("random 3-variable ideals with strong persistence: depth increase", 0, len(thm31_failures(instances, N)))
    return r.rows


def corollary_3_2_rows(c_values, instances) -> list:
    r = _Rows("Corollary 3.2")
    for name, I in [("Example 1.3", example_1_3())] + [(f"Theorem 1.4 c={c}", theorem_1_4(c)) for c in c_values]:
        r.check(f"{name}: closure depth non-increasing", True, depth_monotonicity(I, 4, on_closure=True).non_increasing)
    r.check("random 3-variable ideals: closure depth increase", 0, len(cor32_failures(instances, 4)))
    return r.rows


# -- random property sweeps; each returns the list of failing ideals --------


def _rng_ideals(ring, count, seed, max_gens=4, max_exp=3):
    rng = random.Random(seed)
    return [random_ideal(ring, rng, max_gens, max_exp) for _ in range(count)]


def dim2_failures(count=RANDOM_INSTANCES, N=4, seed=11) -> list:
    return [I for I in _rng_ideals(Ring(("x", "y")), count, seed) if not dim2_check(I, N)]


def dim3_failures(count=RANDOM_INSTANCES, N=6, seed=12) -> list:
    bad = []
    for I in _rng_ideals(XYZ, count, seed, max_gens=3, max_exp=3):
        if dim3_astab_eq_dstab_check(I, N).status == "unequal":
            bad.append(I)
    return bad


def thm31_failures(count=RANDOM_INSTANCES, N=5, seed=13) -> list:
    bad = []
    for I in _rng_ideals(XYZ, count, seed, max_gens=3, max_exp=3):
        rep = profile(I, N)
        if all(rep.persistence_flags()):
            prof = rep.depth_profile()
            if any(b > a for a, b in zip(prof, prof[1:])):
                bad.append(I)
    return bad


def cor32_failures(count=RANDOM_INSTANCES, N=4, seed=14) -> list:
    return [
        I
        for I in _rng_ideals(XYZ, count, seed, max_gens=3, max_exp=3)
        if not depth_monotonicity(I, N, on_closure=True).non_increasing
    ]


def paper_suite(c_values=DEFAULT_C, horizon=None, jobs=1, instances=RANDOM_INSTANCES) -> list:
    """All rows for the given parameters; ``horizon`` overrides the defaults."""
    profiles = _Profiles(jobs)
    rows = []
    h = horizon
    rows += remark_1_1_rows(h or 4, instances)
    rows += theorem_1_2_rows(h or 6, profiles, instances)
    rows += example_1_3_rows(h or 5, profiles)
    for c in c_values:
        rows += theorem_1_4_rows(c, h or max(6, c + 4), profiles)
    rows += example_2_1_rows(h or 5, profiles)
    rows += example_2_2_rows(h or 5, profiles)
    for c in c_values:
        if c >= 2:
            rows += theorem_2_3_rows(c, h or max(6, c + 4), profiles)
    rows += theorem_3_1_rows(h or 5, profiles, c_values, instances)
    rows += corollary_3_2_rows(c_values, instances)
    return rows
