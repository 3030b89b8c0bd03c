"""Command-line front end.

Exit codes: 0 success, 1 a check or suite row failed, 2 usage error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__, closure, resolution
from .core import Ring, colon_ideal
from .decomposition import (
    associated_primes,
    irreducible_decomposition,
    minimal_primes,
    sorted_primes,
)
from .errors import ExponentOverflowError, ResourceLimitError, UsageError
from .limits import LIMITS
from .report import TOOL, dumps, ideal_to_json, primes_to_json, record_to_json, report_to_dict
from .stability import (
    build_report,
    depth_monotonicity,
    dim2_check,
    dim3_astab_eq_dstab_check,
    iter_records,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _c_list(text):
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad c list {text!r}") from None
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("c values must be positive integers")
    return vals


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", help="comma-separated variables, e.g. x,y,z")
    common.add_argument("--ideal", help='generators, e.g. "x^2*y, y*z^3"')
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    common.add_argument("--stable-output", action="store_true", help="zero timing fields")
    common.add_argument("--limit-lattice", type=_positive, help="max lcm lattice elements")
    common.add_argument("--limit-chains", type=_positive, help="max order-complex chains")
    common.add_argument("--limit-box", type=_positive, help="max closure box points")

    p = _ArgParser(prog=TOOL, description="Stability indices of powers of monomial ideals.")
    p.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_ArgParser)
    sub.required = True
    for name, text in [
        ("ass", "associated primes"),
        ("min", "minimal primes and height"),
        ("decompose", "irreducible decomposition"),
        ("depth", "depth of R/I"),
    ]:
        sub.add_parser(name, parents=[common], help=text)
    b = sub.add_parser("betti", parents=[common], help="multigraded Betti numbers of R/I")
    b.add_argument("--method", choices=("lattice", "koszul"), default="lattice")
    b.add_argument("--char", type=int, default=None, help="rank over F_p instead of Q")
    c = sub.add_parser("closure", parents=[common], help="integral closure of I^k")
    c.add_argument("--power", type=_positive, default=1)
    co = sub.add_parser("colon", parents=[common], help="I : J")
    co.add_argument("--by", required=True, help="monomial or ideal")
    pr = sub.add_parser("profile", parents=[common], help="per-power stability profile")
    pr.add_argument("--horizon", type=_positive, default=6)
    pr.add_argument("--closure", action="store_true", help="also profile closures of powers")
    ch = sub.add_parser("check", parents=[common], help="dim2 | dim3 | monotone")
    ch.add_argument("which", choices=("dim2", "dim3", "monotone"))
    ch.add_argument("--horizon", type=_positive, default=6)
    ch.add_argument("--closure", action="store_true", help="monotone: use closures of powers")
    ps = sub.add_parser("paper-suite", parents=[common], help="reproduce every family claim")
    ps.add_argument("--c", type=_c_list, default=[1, 2, 3], dest="c_values")
    ps.add_argument("--horizon", type=_positive, default=None)
    ps.add_argument("--random", type=_positive, default=None, help="random instances per property")
    return p


def _load(args):
    if not args.ring or not args.ideal:
        raise UsageError(f"{args.command} needs --ring and --ideal")
    ring = Ring.parse(args.ring)
    return ring, ring.ideal(args.ideal)


def _apply_limits(args):
    if args.limit_lattice:
        LIMITS.max_lattice = args.limit_lattice
    if args.limit_chains:
        LIMITS.max_chains = args.limit_chains
    if args.limit_box:
        LIMITS.max_box = args.limit_box


def _emit(args, doc, text_lines, out):
    if args.json:
        out.write(dumps(doc) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def _base(args, I):
    return {"tool": {"name": TOOL, "version": __version__}, "ring": list(I.ring.variables), "ideal": ideal_to_json(I)}


def _cmd_simple(args, out):
    ring, I = _load(args)
    doc = _base(args, I)
    if args.command == "ass":
        ass = associated_primes(I)
        doc["ass"] = primes_to_json(ass)
        lines = [str(p) for p in sorted_primes(ass)]
    elif args.command == "min":
        mins = minimal_primes(I)
        doc["min"] = primes_to_json(mins)
        doc["height"] = min(len(p) for p in mins)
        lines = [str(p) for p in sorted_primes(mins)] + [f"height {doc['height']}"]
    elif args.command == "decompose":
        comps = irreducible_decomposition(I)
        doc["components"] = [ideal_to_json(q.ideal()) for q in comps]
        lines = [str(q) for q in comps]
    elif args.command == "depth":
        d = resolution.depth(I)
        doc["depth"] = d
        doc["projdim"] = I.n - d
        lines = [f"depth {d}"]
    elif args.command == "betti":
        fn = resolution.betti_table if args.method == "lattice" else resolution.koszul_betti_oracle
        table = fn(I, p=args.char)
        entries = table.sorted_entries()
        doc["betti"] = [{"i": i, "multidegree": list(m), "rank": r} for (i, m), r in entries]
        doc["projdim"] = table.projdim
        lines = [f"{i}\t{ring.monomial(m)}\t{r}" for (i, m), r in entries]
        lines.append(f"projdim {table.projdim}")
    elif args.command == "closure":
        C = closure.integral_closure(I, args.power)
        doc["power"] = args.power
        doc["closure"] = ideal_to_json(C)
        lines = [str(C)]
    elif args.command == "colon":
        J = ring.ideal(args.by)
        Q = colon_ideal(I, J)
        doc["by"] = ideal_to_json(J)
        doc["colon"] = ideal_to_json(Q)
        lines = [str(Q)]
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown command {args.command}")
    _emit(args, doc, lines, out)
    return EXIT_OK


def _format_report_text(report) -> list:
    lines = [f"ideal {report.ideal} in K[{report.ring}], horizon {report.horizon}"]
    for r in report.records:
        ass = "{" + ", ".join(str(p) for p in sorted_primes(r.ass)) + "}"
        line = f"n={r.n} gens={r.num_generators} depth={r.depth} ass={ass}"
        if r.closure_ass is not None:
            cass = "{" + ", ".join(str(p) for p in sorted_primes(r.closure_ass)) + "}"
            line += f" closure_depth={r.closure_depth} closure_ass={cass}"
        if r.strong_persistence is not None:
            line += f" persistence={r.strong_persistence}"
        lines.append(line)
    for key, val in (
        ("astab", report.astab_observed),
        ("dstab", report.dstab_observed),
        ("astabbar", report.astabbar_observed),
    ):
        cert = report.certification.get(key)
        if cert is not None:
            lines.append(f"{key} = {val if val is not None else 'unsettled'} [{cert.level}] {cert.reason}")
    return lines


def _cmd_profile(args, out):
    _, I = _load(args)
    records = []
    try:
        for rec in iter_records(I, args.horizon, args.closure, args.jobs):
            records.append(rec)
    except ResourceLimitError as err:
        doc = _base(args, I)
        doc["horizon"] = args.horizon
        doc["records"] = [record_to_json(r, args.stable_output) for r in records]
        doc["error"] = {"kind": "resource_limit", "message": str(err), "power": err.power}
        _emit(args, doc, [f"resource limit: {err}"], out)
        return EXIT_LIMIT
    report = build_report(I, args.horizon, records)
    _emit(args, report_to_dict(report, args.stable_output), _format_report_text(report), out)
    return EXIT_OK


def _cmd_check(args, out):
    _, I = _load(args)
    doc = _base(args, I)
    doc["check"] = args.which
    doc["horizon"] = args.horizon
    if args.which == "dim2":
        ok = dim2_check(I, args.horizon)
        doc["passed"] = ok
        lines = [f"dim2: {'all indices 1' if ok else 'FAILED'}"]
    elif args.which == "dim3":
        v = dim3_astab_eq_dstab_check(I, args.horizon)
        ok = v.status != "unequal"
        doc.update(status=v.status, astab=v.astab, dstab=v.dstab, passed=ok)
        lines = [f"dim3: {v.status} (astab={v.astab}, dstab={v.dstab})"]
    else:
        v = depth_monotonicity(I, args.horizon, on_closure=args.closure)
        ok = v.non_increasing
        doc.update(non_increasing=ok, violation_at=v.violation_at, profile=v.profile, passed=ok)
        word = "non-increasing" if ok else f"violation at n={v.violation_at}"
        lines = [f"monotone: {word} {tuple(v.profile)}"]
    _emit(args, doc, lines, out)
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_suite(args, out):
    from .suite import RANDOM_INSTANCES, paper_suite

    t0 = time.perf_counter()
    rows = paper_suite(args.c_values, args.horizon, args.jobs, args.random or RANDOM_INSTANCES)
    failed = [r for r in rows if not r.passed]
    doc = {
        "tool": {"name": TOOL, "version": __version__},
        "c": args.c_values,
        "horizon": args.horizon,
        "suite": [r.as_dict() for r in rows],
        "passed": not failed,
        "seconds": 0.0 if args.stable_output else round(time.perf_counter() - t0, 3),
    }
    lines = []
    for r in rows:
        mark = "PASS" if r.passed else "FAIL"
        param = f" [{r.parameter}]" if r.parameter else ""
        lines.append(f"{mark}  {r.family}{param}: {r.claim} | expected {r.expected} | computed {r.computed}")
    lines.append(f"{len(rows) - len(failed)}/{len(rows)} rows passed")
    _emit(args, doc, lines, out)
    return EXIT_OK if not failed else EXIT_FAIL


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    saved = (LIMITS.max_lattice, LIMITS.max_chains, LIMITS.max_box)
    args = None
    try:
        args = build_parser().parse_args(argv)
        _apply_limits(args)
        if args.command == "profile":
            return _cmd_profile(args, out)
        if args.command == "check":
            return _cmd_check(args, out)
        if args.command == "paper-suite":
            return _cmd_suite(args, out)
        return _cmd_simple(args, out)
    except (UsageError, ExponentOverflowError) as e:
        return _fail(args, out, err, "usage", e, EXIT_USAGE)
    except ResourceLimitError as e:
        return _fail(args, out, err, "resource_limit", e, EXIT_LIMIT)
    finally:
        LIMITS.max_lattice, LIMITS.max_chains, LIMITS.max_box = saved


def _fail(args, out, err, kind, exc, code):
    if args is not None and getattr(args, "json", False):
        out.write(dumps({"error": {"kind": kind, "message": str(exc)}}) + "\n")
    else:
        err.write(f"{TOOL}: error: {exc}\n")
    return code


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
