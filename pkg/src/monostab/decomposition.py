"""Irreducible decomposition and associated primes of monomial ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce

from .core import (
    MonomialIdeal,
    Monomial,
    Ring,
    _minimal_exps,
    _same_ring,
    colon_monomial,
    equals,
    intersect,
)
from .errors import UsageError


@dataclass(frozen=True, order=False)
class PrimeSupport:
    """A set of variables, standing for the prime ideal they generate.

    ``indices`` are positions in the ring's variable list, ascending, so
    the variables always appear in declaration order.
    """

    ring: Ring
    indices: tuple

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        if not idx:
            raise UsageError("a prime support needs at least one variable")
        if idx[0] < 0 or idx[-1] >= self.ring.n:
            raise UsageError(f"variable index out of range in {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, ring: Ring, names) -> "PrimeSupport":
        if isinstance(names, str):
            names = [v.strip() for v in names.strip("()").split(",")]
        return cls(ring, tuple(ring.index(v) for v in names))

    @property
    def vars(self) -> tuple:
        return tuple(self.ring.variables[i] for i in self.indices)

    def __len__(self):
        return len(self.indices)

    def issubset(self, other: "PrimeSupport") -> bool:
        return set(self.indices) <= set(other.indices)

    def ideal(self) -> MonomialIdeal:
        n = self.ring.n
        return MonomialIdeal(
            self.ring, _minimal_exps(tuple(int(j == i) for j in range(n)) for i in self.indices)
        )

    def sort_key(self):
        return (len(self.indices), self.indices)

    def __str__(self):
        return "(" + ",".join(self.vars) + ")"

    __repr__ = __str__


def sorted_primes(primes) -> list:
    return sorted(primes, key=PrimeSupport.sort_key)


def full_support(ring: Ring) -> PrimeSupport:
    return PrimeSupport(ring, tuple(range(ring.n)))


@dataclass(frozen=True)
class IrreducibleComponent:
    """Ideal generated by pure powers: ``exponents[i] == 0`` means x_i is absent."""

    ring: Ring
    exponents: tuple

    @property
    def entries(self) -> dict:
        return {self.ring.variables[i]: e for i, e in enumerate(self.exponents) if e}

    @property
    def support(self) -> PrimeSupport:
        return PrimeSupport(self.ring, tuple(i for i, e in enumerate(self.exponents) if e))

    def ideal(self) -> MonomialIdeal:
        gens = []
        for i, e in enumerate(self.exponents):
            if e:
                g = [0] * self.ring.n
                g[i] = e
                gens.append(tuple(g))
        return MonomialIdeal(self.ring, _minimal_exps(gens))

    def contained_in(self, other: "IrreducibleComponent") -> bool:
        """self ⊆ other: each pure power of self lies in other."""
        for a, b in zip(self.exponents, other.exponents):
            if a and not (b and b <= a):
                return False
        return True

    def __str__(self):
        return str(self.ideal())


def _check_proper_nonzero(I: MonomialIdeal):
    if I.is_zero():
        raise UsageError("operation needs a nonzero ideal, got (0)")
    if I.is_unit():
        raise UsageError("operation needs a proper ideal, got the unit ideal")


def _split_leaves(gens: tuple, memo: dict) -> frozenset:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    pivot = None
    for g in gens:  # gens are lex sorted, so this is the lex-first mixed generator
        if sum(1 for e in g if e) > 1:
            pivot = g
            break
    if pivot is None:
        comp = [0] * len(gens[0])
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    comp[i] = e
        result = frozenset([tuple(comp)])
    else:
        i = next(j for j, e in enumerate(pivot) if e)
        u = tuple(pivot[i] if j == i else 0 for j in range(len(pivot)))
        v = tuple(0 if j == i else e for j, e in enumerate(pivot))
        rest = tuple(g for g in gens if g != pivot)
        left = _split_leaves(_minimal_exps(rest + (u,)), memo)
        right = _split_leaves(_minimal_exps(rest + (v,)), memo)
        result = left | right
    memo[gens] = result
    return result


def _intersection(ring, comps) -> MonomialIdeal:
    return reduce(intersect, (c.ideal() for c in comps))


@lru_cache(maxsize=4096)
def _decompose(I: MonomialIdeal) -> tuple:
    leaves = [IrreducibleComponent(I.ring, c) for c in _split_leaves(I.gens, {})]
    # Pairwise pruning: if Q ⊆ Q' then Q' is redundant.
    kept = [
        q
        for q in leaves
        if not any(p is not q and p.contained_in(q) for p in leaves)
    ]
    # Drop-one pass to a fixed point.
    changed = True
    while changed and len(kept) > 1:
        changed = False
        for idx in range(len(kept)):
            others = kept[:idx] + kept[idx + 1:]
            if equals(_intersection(I.ring, others), I):
                kept = others
                changed = True
                break
    if not equals(_intersection(I.ring, kept), I):
        raise AssertionError(f"irreducible decomposition of {I} does not intersect back to it")
    kept.sort(key=lambda c: (c.support.sort_key(), c.exponents))
    return tuple(kept)


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """Irredundant irreducible components of I, found by splitting generators.

    A generator g = x_i^a * v with v != 1 gives I = (I + x_i^a) ∩ (I + v);
    recursion stops once every generator is a pure power.
    """
    _check_proper_nonzero(I)
    return list(_decompose(I))


def associated_primes(I: MonomialIdeal) -> frozenset:
    _check_proper_nonzero(I)
    return frozenset(c.support for c in _decompose(I))


def minimal_primes(I: MonomialIdeal) -> frozenset:
    ass = associated_primes(I)
    return frozenset(p for p in ass if not any(q != p and q.issubset(p) for q in ass))


def height(I: MonomialIdeal) -> int:
    return min(len(p) for p in minimal_primes(I))


def _supports(I: MonomialIdeal):
    return [frozenset(i for i, e in enumerate(g) if e) for g in I.gens]


def potential_ass(I: MonomialIdeal) -> frozenset:
    """Every monomial prime containing I (vertex covers of generator supports)."""
    _check_proper_nonzero(I)
    sups = _supports(I)
    out = []
    for r in range(1, I.n + 1):
        for S in itertools.combinations(range(I.n), r):
            s = set(S)
            if all(s & sup for sup in sups):
                out.append(PrimeSupport(I.ring, S))
    return frozenset(out)


def min_from_potential(I: MonomialIdeal) -> frozenset:
    """Minimal vertex covers; agrees with :func:`minimal_primes`."""
    pot = potential_ass(I)
    return frozenset(p for p in pot if not any(q != p and q.issubset(p) for q in pot))


def ass_witness(I: MonomialIdeal, P: PrimeSupport) -> Monomial | None:
    """A monomial m with I : m equal to the prime of P, or None.

    Divisors of the lcm of the generators are scanned by increasing
    degree; this is exhaustive because I : m only depends on m truncated
    at that lcm.
    """
    _check_proper_nonzero(I)
    _same_ring(I.ring, P.ring)
    target = P.ideal()
    top = I.max_exponents()
    boxes = sorted(itertools.product(*(range(t + 1) for t in top)), key=lambda e: (sum(e), e))
    for e in boxes:
        if I.contains_exps(e):
            continue
        m = Monomial(I.ring, e)
        if colon_monomial(I, m).gens == target.gens:
            return m
    return None


def min_of_monomial(f: Monomial) -> frozenset:
    """Min((f)): one singleton prime per variable dividing f."""
    return frozenset(PrimeSupport(f.ring, (i,)) for i, e in enumerate(f.exponents) if e)
