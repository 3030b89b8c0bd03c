"""Multigraded Betti numbers, projective dimension and depth of R/I.

Two independent routes compute the Betti numbers:

* :func:`betti_table` uses the lcm lattice: the Betti number of R/I in
  homological degree i and multidegree m is the reduced rational homology
  of the order complex of the open interval (1, m), in dimension i - 2.
* :func:`koszul_betti_oracle` computes Tor_i(R/I, K)_m from the Koszul
  complex on all variables, restricted to multidegree m.

:func:`depth` uses Auslander-Buchsbaum, depth R/I = n - pd R/I.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import MonomialIdeal, divides
from .errors import ResourceLimitError, UsageError
from .limits import LIMITS
from .linalg import rank


@dataclass(frozen=True)
class LcmLattice:
    """Join-closed set of lcms of generators, plus the bottom element."""

    ring: object
    elements: tuple  # sorted by (degree, exponents); bottom first

    @property
    def bottom(self):
        return self.elements[0]

    def __len__(self):
        return len(self.elements)

    def __contains__(self, m):
        return tuple(m) in set(self.elements)

    def below(self, m) -> list:
        """Elements of the open interval (bottom, m)."""
        m = tuple(m)
        bot = self.bottom
        return [a for a in self.elements if a != bot and a != m and divides(a, m)]


def _lmax(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def lcm_lattice(I: MonomialIdeal, max_elements: int | None = None) -> LcmLattice:
    """All lcms of nonempty generator subsets, plus 1.

    Built by closing the generator set under joins with single generators,
    which reaches every subset lcm without enumerating subsets.
    """
    if not I.is_proper_nonzero():
        raise UsageError(f"lcm lattice needs a proper nonzero ideal, got {I}")
    cap = LIMITS.max_lattice if max_elements is None else max_elements
    gens = I.gens
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                j = _lmax(a, g)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        if len(seen) + 1 > cap:
            raise ResourceLimitError(
                f"lcm lattice of {I} exceeds {cap} elements", limit="lattice"
            )
        frontier = nxt
    bottom = (0,) * I.n
    elems = sorted(seen, key=lambda e: (sum(e), e))
    return LcmLattice(I.ring, (bottom,) + tuple(elems))


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers of R/I, keyed by (i, multidegree)."""

    ring: object
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key):
        i, m = key
        return self.entries.get((i, tuple(m)), 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    @property
    def projdim(self) -> int:
        return max(i for i, _ in self.entries)

    def totals(self) -> list:
        """Total Betti numbers beta_0, beta_1, ..., beta_pd."""
        out = [0] * (self.projdim + 1)
        for (i, _), r in self.entries.items():
            out[i] += r
        return out

    def sorted_entries(self) -> list:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))


class _ChainBudget:
    def __init__(self, cap):
        self.cap = cap
        self.used = 0

    def spend(self, k):
        self.used += k
        if self.used > self.cap:
            raise ResourceLimitError(
                f"order complexes need more than {self.cap} chains", limit="chains"
            )


def count_chains(poset: list, stop: int | None = None) -> int:
    """Number of nonempty chains in ``poset`` (sorted by degree), by DP."""
    ending = []
    total = 0
    for k, a in enumerate(poset):
        f = 1
        for j in range(k):
            if ending[j] and poset[j] != a and divides(poset[j], a):
                f += ending[j]
        ending.append(f)
        total += f
        if stop is not None and total > stop:
            return total
    return total


def _chains(poset: list, budget: _ChainBudget) -> list:
    """Faces of the order complex of ``poset`` grouped by dimension."""
    ups = {a: [b for b in poset if b != a and divides(a, b)] for a in poset}
    by_dim: list = []
    stack = [(a,) for a in poset]
    while stack:
        chain = stack.pop()
        d = len(chain) - 1
        while len(by_dim) <= d:
            by_dim.append([])
        by_dim[d].append(chain)
        budget.spend(1)
        for b in ups[chain[-1]]:
            stack.append(chain + (b,))
    return by_dim


def reduced_homology_ranks(by_dim: list, p: int | None = None) -> dict:
    """Reduced homology ranks {dimension: rank}, nonzero entries only.

    ``by_dim[d]`` lists the d-faces; the empty face in dimension -1 is
    implicit.
    """
    sizes = {-1: 1}
    for d, faces in enumerate(by_dim):
        sizes[d] = len(faces)
    ranks = {}
    # boundary rank of d -> d-1
    ranks[0] = 1 if by_dim and by_dim[0] else 0
    for d in range(1, len(by_dim)):
        index = {f: k for k, f in enumerate(by_dim[d - 1])}
        rows = []
        for face in by_dim[d]:
            row = {}
            for j in range(len(face)):
                row[index[face[:j] + face[j + 1:]]] = -1 if j % 2 else 1
            rows.append(row)
        ranks[d] = rank(rows, p)
    out = {}
    for d, size in sizes.items():
        h = size - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def betti_table(I: MonomialIdeal, p: int | None = None, max_chains: int | None = None) -> BettiTable:
    """Multigraded Betti numbers of R/I from lcm-lattice homology.

    ``p`` switches the ranks to the prime field F_p (diagnostic mode).
    """
    lat = lcm_lattice(I)
    cap = LIMITS.max_chains if max_chains is None else max_chains
    intervals = [(m, lat.below(m)) for m in lat.elements[1:]]
    # Refuse before doing any homology if the order complexes are too big.
    total = 0
    for _, below in intervals:
        total += count_chains(below, stop=cap - total)
        if total > cap:
            raise ResourceLimitError(
                f"order complexes of the lcm lattice of {I} need more than {cap} chains",
                limit="chains",
            )
    budget = _ChainBudget(cap)
    table = BettiTable(I.ring, {(0, lat.bottom): 1})
    for m, below in intervals:
        faces = _chains(below, budget)
        for d, h in reduced_homology_ranks(faces, p).items():
            table.entries[(d + 2, m)] = h
    return table


def koszul_ranks_at(I: MonomialIdeal, m, p: int | None = None) -> dict:
    """Tor_i(R/I, K) in multidegree m via the Koszul complex; {i: rank}."""
    n = I.n
    m = tuple(m)
    basis = []
    for i in range(n + 1):
        layer = []
        for S in itertools.combinations(range(n), i):
            a = list(m)
            ok = True
            for j in S:
                a[j] -= 1
                if a[j] < 0:
                    ok = False
                    break
            if ok and not I.contains_exps(tuple(a)):
                layer.append(S)
        basis.append(layer)
    ranks = {}
    for i in range(1, n + 1):
        index = {S: k for k, S in enumerate(basis[i - 1])}
        rows = []
        for S in basis[i]:
            row = {}
            for pos, j in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                k = index.get(T)
                if k is not None:  # otherwise the image monomial lies in I
                    row[k] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[i] = rank(rows, p)
    out = {}
    for i in range(n + 1):
        h = len(basis[i]) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            out[i] = h
    return out


def koszul_betti_oracle(I: MonomialIdeal, p: int | None = None) -> BettiTable:
    """Independent Betti table from the multigraded Koszul complex."""
    lat = lcm_lattice(I)
    table = BettiTable(I.ring)
    for m in lat.elements:
        for i, h in koszul_ranks_at(I, m, p).items():
            table.entries[(i, m)] = h
    return table


def projdim(I: MonomialIdeal, method: str = "auto") -> int:
    """Projective dimension of R/I.

    ``method`` is ``"lattice"``, ``"koszul"``, or ``"auto"``; auto tries the
    lattice route and falls back to the Koszul route when the order
    complexes outgrow the chain budget. Both routes give the same numbers.
    """
    if I.is_unit():
        raise UsageError("R/I is zero for the unit ideal")
    if I.is_zero():
        return 0
    if method == "lattice":
        return betti_table(I).projdim
    if method == "koszul":
        return koszul_betti_oracle(I).projdim
    if method != "auto":
        raise UsageError(f"unknown method {method!r}")
    try:
        return betti_table(I).projdim
    except ResourceLimitError as err:
        if err.limit != "chains":
            raise
        return koszul_betti_oracle(I).projdim


def depth(I: MonomialIdeal, method: str = "auto") -> int:
    """depth R/I = n - pd R/I."""
    return I.n - projdim(I, method)
