"""JSON form of stability reports.

Keys are sorted and every set is emitted as a sorted list, so the same
report always serializes to the same bytes. ``stable=True`` zeroes the
timing fields for golden-file comparisons.
"""

from __future__ import annotations

import json

from . import __version__
from .core import MonomialIdeal, Ring, format_exps, from_exps
from .decomposition import PrimeSupport, sorted_primes
from .stability import Certification, PowerRecord, StabilityReport

TOOL = "monostab"


def primes_to_json(primes):
    if primes is None:
        return None
    return [list(p.vars) for p in sorted_primes(primes)]


def primes_from_json(ring: Ring, data):
    if data is None:
        return None
    return frozenset(PrimeSupport.of(ring, names) for names in data)


def ideal_to_json(I: MonomialIdeal) -> list:
    return [format_exps(I.ring, g) for g in I.gens]


def ideal_from_json(ring: Ring, data) -> MonomialIdeal:
    if not data:
        return ring.zero_ideal()
    return from_exps(ring, [ring.monomial(s).exponents for s in data])


def record_to_json(rec: PowerRecord, stable: bool = False) -> dict:
    return {
        "n": rec.n,
        "generators": rec.num_generators,
        "ass": primes_to_json(rec.ass),
        "depth": rec.depth,
        "closure_ass": primes_to_json(rec.closure_ass),
        "closure_depth": rec.closure_depth,
        "strong_persistence": rec.strong_persistence,
        "seconds": 0.0 if stable else round(rec.seconds, 6),
    }


def record_from_json(ring: Ring, d: dict) -> PowerRecord:
    return PowerRecord(
        n=d["n"],
        num_generators=d["generators"],
        ass=primes_from_json(ring, d["ass"]),
        depth=d["depth"],
        closure_ass=primes_from_json(ring, d["closure_ass"]),
        closure_depth=d["closure_depth"],
        strong_persistence=d["strong_persistence"],
        seconds=d["seconds"],
    )


def report_to_dict(report: StabilityReport, stable: bool = False) -> dict:
    return {
        "tool": {"name": TOOL, "version": __version__},
        "ring": list(report.ring.variables),
        "ideal": ideal_to_json(report.ideal),
        "horizon": report.horizon,
        "records": [record_to_json(r, stable) for r in report.records],
        "indices": {
            "astab": report.astab_observed,
            "dstab": report.dstab_observed,
            "astabbar": report.astabbar_observed,
            "ass_infinity": primes_to_json(report.ass_infinity),
            "closure_ass_infinity": primes_to_json(report.closure_ass_infinity),
            "limit_depth": report.limit_depth,
        },
        "certification": {
            k: {"level": c.level, "reason": c.reason} for k, c in report.certification.items()
        },
        "suite": [],
    }


def report_from_dict(d: dict) -> StabilityReport:
    ring = Ring(tuple(d["ring"]))
    idx = d["indices"]
    return StabilityReport(
        ideal=ideal_from_json(ring, d["ideal"]),
        horizon=d["horizon"],
        records=[record_from_json(ring, r) for r in d["records"]],
        astab_observed=idx["astab"],
        dstab_observed=idx["dstab"],
        astabbar_observed=idx["astabbar"],
        certification={k: Certification(v["level"], v["reason"]) for k, v in d["certification"].items()},
    )


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def loads_report(text: str) -> StabilityReport:
    return report_from_dict(json.loads(text))
