"""Integral closures of powers of monomial ideals.

x^v lies in the integral closure of I^k exactly when v lies in k times the
Newton polyhedron of I, i.e. when there are rational weights lam >= 0
with sum(lam) = k and sum(lam_i * a_i) <= v. Since the generator
exponents a_i are nonnegative, that system is feasible iff

    max { sum(lam) : sum(lam_i * a_i) <= v, lam >= 0 }  >=  k,

(scale an optimal lam down to total k). The maximum is found with an
exact simplex over ``Fraction``; the origin is always a feasible start,
so no phase one is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Monomial, MonomialIdeal, _minimal_exps, _same_ring, multiply, power, principal
from .errors import ResourceLimitError, UsageError
from .limits import LIMITS


@dataclass(frozen=True)
class NewtonSystem:
    """k times the Newton polyhedron of the ideal generated by ``generators``."""

    generators: tuple
    scale: int = 1

    def __post_init__(self):
        if not self.generators:
            raise UsageError("a Newton system needs at least one generator")
        if self.scale < 1:
            raise UsageError(f"scale must be positive, got {self.scale}")
        dims = {len(a) for a in self.generators}
        if len(dims) != 1:
            raise UsageError("generator exponent vectors differ in length")

    @classmethod
    def of(cls, I: MonomialIdeal, k: int = 1) -> "NewtonSystem":
        if I.is_zero():
            raise UsageError("the zero ideal has no Newton polyhedron")
        return cls(tuple(I.gens), k)

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    def __contains__(self, v) -> bool:
        return np_member(v, self)


def _max_weight_reaches(gens, v, k) -> bool:
    """Simplex with Bland's rule; stops as soon as the objective hits k."""
    n = len(v)
    m = len(gens)
    # tableau rows: [coeffs of lam_1..lam_m, slack_1..slack_n | rhs]
    rows = []
    for j in range(n):
        row = [Fraction(g[j]) for g in gens] + [Fraction(int(i == j)) for i in range(n)]
        row.append(Fraction(v[j]))
        rows.append(row)
    width = m + n
    # reduced costs for maximizing sum(lam): objective row z - sum(lam) = 0
    obj = [Fraction(-1)] * m + [Fraction(0)] * n + [Fraction(0)]
    basis = [m + j for j in range(n)]
    while True:
        if obj[-1] >= k:
            return True
        enter = next((c for c in range(width) if obj[c] < 0), None)
        if enter is None:
            return obj[-1] >= k
        leave = None
        best = None
        for r in range(n):
            a = rows[r][enter]
            if a > 0:
                ratio = rows[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            return True  # unbounded: a zero generator column
        prow = rows[leave]
        piv = prow[enter]
        prow = [x / piv for x in prow]
        rows[leave] = prow
        for r in range(n):
            if r != leave and rows[r][enter]:
                f = rows[r][enter]
                rows[r] = [x - f * y for x, y in zip(rows[r], prow)]
        f = obj[enter]
        obj = [x - f * y for x, y in zip(obj, prow)]
        basis[leave] = enter


def np_member(v, sys: NewtonSystem) -> bool:
    """Exact test of ``v`` against ``sys.scale`` times the Newton polyhedron."""
    v = tuple(v)
    if len(v) != sys.dim:
        raise UsageError(f"vector of length {len(v)} against a system of dimension {sys.dim}")
    k = sys.scale
    for a in sys.generators:
        if all(k * x <= y for x, y in zip(a, v)):
            return True
    return _max_weight_reaches(sys.generators, v, k)


def integral_closure(I: MonomialIdeal, k: int = 1, max_box: int | None = None) -> MonomialIdeal:
    """Minimal generators of the integral closure of I^k.

    Lattice points of the box 0 <= v_j <= k * max_i a_ij are visited in
    graded lex order; a point divisible by an accepted generator is
    skipped, and any other point in the polyhedron is a minimal generator.
    """
    if I.is_zero():
        raise UsageError("integral closure of the zero ideal")
    if k < 1:
        raise UsageError(f"power must be positive, got {k}")
    if I.is_unit():
        return I
    max_box = LIMITS.max_box if max_box is None else max_box
    sys = NewtonSystem.of(I, k)
    top = [k * t for t in I.max_exponents()]
    volume = 1
    for t in top:
        volume *= t + 1
    if volume > max_box:
        raise ResourceLimitError(
            f"closure box for {I} at power {k} has {volume} points (cap {max_box})", limit="box"
        )
    points = sorted(itertools.product(*(range(t + 1) for t in top)), key=lambda e: (sum(e), e))
    accepted: list = []
    for v in points:
        dominated = False
        for g in accepted:
            if all(x <= y for x, y in zip(g, v)):
                dominated = True
                break
        if dominated:
            continue
        if np_member(v, sys):
            accepted.append(v)
    return MonomialIdeal(I.ring, _minimal_exps(accepted))


def closure_scaling_check(f: Monomial, J: MonomialIdeal, k: int) -> bool:
    """Check that closure((f*J)^k) = f^k * closure(J^k)."""
    _same_ring(f.ring, J.ring)
    lhs = integral_closure(multiply(principal(f), J), k)
    rhs = multiply(principal(f**k), integral_closure(J, k))
    return lhs.gens == rhs.gens


def member_by_powers(v, I: MonomialIdeal, k: int, max_s: int | None = None):
    """Independent membership check: is x^(s*v) in I^(s*k) for some s <= max_s?

    Returns True when such an s is found and None when the search bound is
    exhausted (which proves nothing). The default bound is the number of
    generators times the largest exponent.
    """
    if max_s is None:
        max_s = max(1, len(I.gens) * max(max(g) for g in I.gens))
    v = tuple(v)
    for s in range(1, max_s + 1):
        if power(I, s * k).contains_exps(tuple(s * x for x in v)):
            return True
    return None
