"""Stability indices of Ass(I^n), depth R/I^n and Ass of closures of powers.

Everything is computed up to a finite horizon N. An index k is *observed*
when the profile is constant on [k, N] and k < N. Certification levels
record how much structure backs an observed index:

``certified``
    a ceiling argument applies and every hypothesis it needs was checked
    inside the horizon (see ``Certification.reason``);
``conditional``
    strong persistence held at every checked power, so the Ass chain is
    ascending on [1, N], but no ceiling was reached;
``observed``
    window constancy only.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .closure import integral_closure
from .core import MonomialIdeal, colon_ideal, power
from .decomposition import (
    associated_primes,
    full_support,
    height,
    minimal_primes,
    potential_ass,
)
from .errors import ResourceLimitError, UsageError
from .resolution import depth

OBSERVED = "observed"
CONDITIONAL = "conditional"
CERTIFIED = "certified"


@dataclass
class PowerRecord:
    n: int
    num_generators: int
    ass: frozenset
    depth: int
    closure_ass: frozenset | None = None
    closure_depth: int | None = None
    strong_persistence: bool | None = None  # I^(n+1) : I == I^n; None at n == N
    seconds: float = 0.0


@dataclass
class Certification:
    level: str
    reason: str


@dataclass
class StabilityReport:
    ideal: MonomialIdeal
    horizon: int
    records: list
    astab_observed: int | None = None
    dstab_observed: int | None = None
    astabbar_observed: int | None = None
    certification: dict = field(default_factory=dict)

    @property
    def ring(self):
        return self.ideal.ring

    def ass_profile(self) -> list:
        return [r.ass for r in self.records]

    def depth_profile(self) -> list:
        return [r.depth for r in self.records]

    def closure_ass_profile(self) -> list:
        return [r.closure_ass for r in self.records]

    def closure_depth_profile(self) -> list:
        return [r.closure_depth for r in self.records]

    def persistence_flags(self) -> list:
        return [r.strong_persistence for r in self.records[:-1]]

    @property
    def ass_infinity(self):
        """Ass at the observed stabilization index, if there is one."""
        if self.astab_observed is None:
            return None
        return self.records[self.astab_observed - 1].ass

    @property
    def closure_ass_infinity(self):
        if self.astabbar_observed is None:
            return None
        return self.records[self.astabbar_observed - 1].closure_ass

    @property
    def limit_depth(self):
        if self.dstab_observed is None:
            return None
        return self.records[self.dstab_observed - 1].depth


def settled_index(values) -> int | None:
    """Least k with values[k-1:] constant, provided k < len(values)."""
    values = list(values)
    N = len(values)
    if N == 0 or any(v is None for v in values):
        return None
    k = N
    while k > 1 and values[k - 2] == values[-1]:
        k -= 1
    return k if k < N else None


def _check_input(I: MonomialIdeal, N: int):
    if N < 2:
        raise UsageError(f"horizon must be at least 2, got {N}")
    if not I.is_proper_nonzero():
        raise UsageError(f"stability needs a proper nonzero ideal, got {I}")


def power_record(I: MonomialIdeal, n: int, with_closure: bool, with_persistence: bool) -> PowerRecord:
    """Everything the report needs about the n-th power."""
    t0 = time.perf_counter()
    try:
        In = power(I, n)
        rec = PowerRecord(n=n, num_generators=len(In.gens), ass=associated_primes(In), depth=depth(In))
        if with_persistence:
            rec.strong_persistence = colon_ideal(power(I, n + 1), I).gens == In.gens
        if with_closure:
            C = integral_closure(I, n)
            rec.closure_ass = associated_primes(C)
            rec.closure_depth = depth(C)
    except ResourceLimitError as err:
        raise err.at_power(n) from err
    rec.seconds = time.perf_counter() - t0
    return rec


def _record_task(args):
    return power_record(*args)


def iter_records(I: MonomialIdeal, N: int, with_closure: bool = False, jobs: int = 1):
    """Yield the power records for n = 1..N in order."""
    _check_input(I, N)
    tasks = [(I, n, with_closure, n < N) for n in range(1, N + 1)]
    if jobs <= 1:
        for t in tasks:
            yield _record_task(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_record_task, tasks)


def _ceiling_3var(I: MonomialIdeal):
    """Min(I) ∪ {m} when I has 3 variables and height >= 2, else None."""
    if I.n != 3 or height(I) < 2:
        return None
    return minimal_primes(I) | {full_support(I.ring)}


def _certify(I: MonomialIdeal, report: StabilityReport) -> dict:
    recs = report.records
    N = report.horizon
    sp_all = all(report.persistence_flags())
    pot = potential_ass(I)
    ceil3 = _ceiling_3var(I)
    out = {}
    window = f"constant on [{{k}}, {N}]"

    k = report.astab_observed
    if k is None:
        out["astab"] = Certification(OBSERVED, f"Ass profile did not settle within horizon {N}")
    elif I.n <= 2 and k == 1:
        out["astab"] = Certification(CERTIFIED, "at most 2 variables: Ass(I^n) is constant")
    elif sp_all and recs[k - 1].ass == pot:
        out["astab"] = Certification(
            CERTIFIED,
            f"strong persistence holds for n < {N} (ascending Ass chain) and Ass(I^{k}) "
            "equals every monomial prime containing I",
        )
    elif sp_all and ceil3 is not None and recs[k - 1].ass == ceil3:
        out["astab"] = Certification(
            CERTIFIED,
            f"3 variables, height >= 2: Ass(I^{k}) = Min(I) ∪ {{m}} is the ceiling and "
            f"strong persistence holds for n < {N} (depth 0 is absorbing)",
        )
    elif sp_all:
        out["astab"] = Certification(
            CONDITIONAL,
            f"ascending Ass chain {window.format(k=k)}; no ceiling reached, later growth "
            "is ruled out only if strong persistence continues past the horizon",
        )
    else:
        out["astab"] = Certification(OBSERVED, f"Ass profile {window.format(k=k)}")

    k = report.dstab_observed
    if k is None:
        out["dstab"] = Certification(OBSERVED, f"depth profile did not settle within horizon {N}")
    elif I.n <= 2 and k == 1:
        out["dstab"] = Certification(CERTIFIED, "at most 2 variables: depth R/I^n is constant")
    elif sp_all and recs[k - 1].depth == 0:
        out["dstab"] = Certification(
            CERTIFIED,
            f"depth reaches 0 at n = {k} and strong persistence holds for n < {N} "
            "(the maximal ideal stays associated)",
        )
    elif I.n == 3 and out["astab"].level == CERTIFIED and report.astab_observed == k:
        out["dstab"] = Certification(CERTIFIED, "3 variables: depth stability index equals the certified Ass index")
    elif sp_all:
        out["dstab"] = Certification(
            CONDITIONAL, f"depth {window.format(k=k)} under strong persistence checked for n < {N}"
        )
    else:
        out["dstab"] = Certification(OBSERVED, f"depth profile {window.format(k=k)}")

    if recs[0].closure_ass is not None:
        k = report.astabbar_observed
        if k is None:
            out["astabbar"] = Certification(
                OBSERVED, f"closure Ass profile did not settle within horizon {N}"
            )
        elif I.n <= 2 and k == 1:
            out["astabbar"] = Certification(CERTIFIED, "at most 2 variables: closure Ass is constant")
        elif recs[k - 1].closure_ass == pot:
            out["astabbar"] = Certification(
                CERTIFIED,
                "Ass of closures of powers is ascending and has reached every monomial prime containing I",
            )
        elif ceil3 is not None and recs[k - 1].closure_ass == ceil3:
            out["astabbar"] = Certification(
                CERTIFIED,
                "3 variables, height >= 2: ascending closure Ass chain reached Min(I) ∪ {m}",
            )
        else:
            out["astabbar"] = Certification(OBSERVED, f"closure Ass profile {window.format(k=k)}")
    return out


def build_report(I: MonomialIdeal, N: int, records: list) -> StabilityReport:
    report = StabilityReport(ideal=I, horizon=N, records=list(records))
    if len(report.records) == N:
        report.astab_observed = settled_index(report.ass_profile())
        report.dstab_observed = settled_index(report.depth_profile())
        if report.records and report.records[0].closure_ass is not None:
            report.astabbar_observed = settled_index(report.closure_ass_profile())
        report.certification = _certify(I, report)
    return report


def profile(I: MonomialIdeal, N: int, with_closure: bool = False, jobs: int = 1) -> StabilityReport:
    """Per-power Ass/depth profile of I up to N, with observed indices."""
    return build_report(I, N, list(iter_records(I, N, with_closure, jobs)))


def strong_persistence(I: MonomialIdeal, N: int) -> list:
    """Flags I^(n+1) : I == I^n for n = 1..N-1."""
    if N < 2:
        raise UsageError(f"horizon must be at least 2, got {N}")
    powers = [power(I, n) for n in range(1, N + 1)]
    return [colon_ideal(powers[n], I).gens == powers[n - 1].gens for n in range(1, N)]


@dataclass
class MonotonicityVerdict:
    non_increasing: bool
    violation_at: int | None
    profile: list


def depth_monotonicity(I: MonomialIdeal, N: int, on_closure: bool = False) -> MonotonicityVerdict:
    """First n with depth(n+1) > depth(n), on powers or on their closures."""
    _check_input(I, N)
    if on_closure:
        prof = [depth(integral_closure(I, n)) for n in range(1, N + 1)]
    else:
        prof = [depth(power(I, n)) for n in range(1, N + 1)]
    for n in range(1, N):
        if prof[n] > prof[n - 1]:
            return MonotonicityVerdict(False, n + 1, prof)
    return MonotonicityVerdict(True, None, prof)


def dim2_check(I: MonomialIdeal, N: int) -> bool:
    """All three indices observed equal to 1 (two-variable rings)."""
    if I.n != 2:
        raise UsageError(f"dim2_check needs a 2-variable ring, got {I.n} variables")
    rep = profile(I, N, with_closure=True)
    return rep.astab_observed == rep.dstab_observed == rep.astabbar_observed == 1


@dataclass
class Dim3Verdict:
    status: str  # "equal", "unequal" or "inconclusive"
    astab: int | None
    dstab: int | None


def dim3_astab_eq_dstab_check(I: MonomialIdeal, N: int, report: StabilityReport | None = None) -> Dim3Verdict:
    if I.n != 3:
        raise UsageError(f"dim3 check needs a 3-variable ring, got {I.n} variables")
    rep = report if report is not None else profile(I, N)
    a, d = rep.astab_observed, rep.dstab_observed
    if a is None or d is None:
        return Dim3Verdict("inconclusive", a, d)
    return Dim3Verdict("equal" if a == d else "unequal", a, d)
