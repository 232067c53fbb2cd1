"""Command-line front end.

Exit codes: 0 success, 2 violated precondition or malformed input,
3 residue-oracle mismatch (an implementation bug, never an expected result).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import cohomology, hurwitz, ranks
from .errors import CycleParseError, OracleMismatchError, PreconditionError
from .superelliptic import simple_cyclic_spec, variable_ramification_divisor

EXIT_OK, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 2, 3
SWEEP_HEADER = "# cyclicrank-sweep v1"
SWEEP_COLUMNS = ["n", "m", "k", "g", "rk_K", "rk_U_upper", "strict_inclusion",
                 "singular_fibers", "certified", "status"]
CERTIFY_LEVELS = ("none", "rigidity", "oracle", "all")


def _fmt_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def _emit(record, fmt, out):
    if fmt == "json":
        out.write(json.dumps(record, sort_keys=True) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        keys = sorted(record)
        w.writerow(keys)
        w.writerow([_fmt_value(record[k]) for k in keys])
    else:
        width = max(len(k) for k in record)
        for k in sorted(record):
            out.write(f"{k:<{width}}  {_fmt_value(record[k])}\n")


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _build_spec(n, m, k, branch=None, moving=None):
    if branch is None:
        branch = [str(x) for x in range(m)]
    if len(branch) != m:
        raise PreconditionError(f"--branch lists {len(branch)} points but m = {m}",
                                "len(branch) = m")
    if moving is None:
        moving_idx = list(range(k))
    else:
        if len(moving) != k:
            raise PreconditionError(f"--moving lists {len(moving)} positions but k = {k}",
                                    "len(moving) = k")
        if any(not 1 <= p <= m for p in moving):
            raise PreconditionError("--moving positions must lie in 1..m", "1 <= position <= m")
        moving_idx = [p - 1 for p in moving]
    return simple_cyclic_spec(n, branch, moving_idx)


def _certify_rigidity(spec):
    D = variable_ramification_divisor(spec)
    lin = cohomology.h0_ram_divisor(spec, D)
    if not lin.rigid:
        raise PreconditionError(f"variable ramification divisor is not rigid (h0 = {lin.h0})",
                                "h0(D) = 1")
    if cohomology.h0_twisted_tangent(spec, D):
        raise PreconditionError("H0(T_C(D)) is nonzero, minimality not certified",
                                "H0(T_C(D)) = 0")
    if cohomology.brute_force_h0(spec, D) != lin.h0:
        raise OracleMismatchError("brute-force h0 disagrees with the eigenspace formula")
    return True


def compute_report(n, m, k, certify="none", branch=None, moving=None):
    report = ranks.cyclic_rank_report(n, m, k)
    if certify == "none":
        return report
    spec = _build_spec(n, m, k, branch, moving)
    if certify in ("rigidity", "all"):
        _certify_rigidity(spec)
    if certify in ("oracle", "all"):
        cert = ranks.certify_rank(spec)
        if cert.rk_K != report.rk_K:
            raise OracleMismatchError(
                f"oracle rank {cert.rk_K} differs from formula rank {report.rk_K}")
        return cert
    return report


# -- subcommands ----------------------------------------------------------

def cmd_report(args, out):
    branch = args.branch.split(",") if args.branch else None
    rep = compute_report(args.n, args.m, args.k, args.certify, branch, args.moving)
    _emit(rep.to_dict(), args.format, out)


def cmd_cd(args, out):
    _emit(ranks.cd_standard_report(args.n).to_dict(), args.format, out)


def cmd_hurwitz(args, out):
    if (args.tuple is None) == (args.cyclic is None):
        raise PreconditionError("give exactly one of --tuple and --cyclic",
                                "one tuple source")
    if args.tuple is not None:
        t = hurwitz.parse_tuple(args.tuple, args.k)
    else:
        if len(args.cyclic) != 2:
            raise PreconditionError("--cyclic takes n,m", "n,m")
        t = hurwitz.cyclic_tuple(args.cyclic[0], args.cyclic[1], args.k)
    if args.k > t.m:
        raise PreconditionError(f"k = {args.k} exceeds the number of positions {t.m}",
                                "k <= m")
    if not hurwitz.validate(t):
        raise PreconditionError("tuple is not a valid cover (product-one and transitivity)",
                                "s_1...s_m = 1, transitive")
    action = hurwitz.braid_orbit(t, args.policy, args.cap)
    record = action.to_dict()
    if args.format == "table":
        record = dict(record, genus=hurwitz.genus_of(t))
    _emit(record, args.format, out)


def _range(spec, name):
    if isinstance(spec, int):
        return [spec]
    if isinstance(spec, list):
        return [int(x) for x in spec]
    if isinstance(spec, dict):
        return list(range(int(spec["min"]), int(spec["max"]) + 1))
    raise PreconditionError(f"config field {name!r} must be an int, list or {{min, max}}",
                            f"{name} range")


def _branch_points(rule, m):
    if rule is None:
        return None
    kind = rule.get("rule", "progression")
    if kind == "explicit":
        pts = [str(x) for x in rule["points"]]
        if len(pts) < m:
            raise PreconditionError(f"explicit branch list has {len(pts)} points, need {m}",
                                    "enough branch points")
        return pts[:m]
    if kind == "progression":
        from fractions import Fraction
        start, step = Fraction(str(rule.get("start", 0))), Fraction(str(rule.get("step", 1)))
        return [str(start + i * step) for i in range(m)]
    raise PreconditionError(f"unknown branch rule {kind!r}", "rule in {explicit, progression}")


def grid_points(config):
    ns, ms = _range(config["n"], "n"), _range(config["m"], "m")
    out = []
    for n in ns:
        for m in ms:
            ks = config.get("k", "all")
            if ks == "all":
                ks_list = list(range(1, max(1, -(-m // n))))
            else:
                ks_list = _range(ks, "k")
            for k in ks_list:
                out.append((n, m, k))
    return out


def sweep_row(point, certify, branch_rule):
    n, m, k = point
    row = {"n": n, "m": m, "k": k}
    try:
        rep = compute_report(n, m, k, certify, _branch_points(branch_rule, m))
    except PreconditionError as exc:
        cond = exc.condition or str(exc)
        row.update(g="", rk_K="", rk_U_upper="", strict_inclusion="", singular_fibers="",
                   certified="", status=f"skipped: {cond}")
        return row
    row.update(g=rep.g, rk_K=rep.rk_K, rk_U_upper=rep.rk_U_upper,
               strict_inclusion=rep.strict_inclusion, singular_fibers=rep.singular_fibers,
               certified=certify if certify != "none" else "formula", status="ok")
    return row


def _sweep_task(payload):
    return sweep_row(*payload)


def run_sweep(config, jobs=1):
    certify = config.get("certify", "none")
    if certify not in CERTIFY_LEVELS:
        raise PreconditionError(f"certify must be one of {CERTIFY_LEVELS}", "certify level")
    branch_rule = config.get("branch")
    payloads = [(p, certify, branch_rule) for p in grid_points(config)]
    if jobs > 1 and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_sweep_task, payloads))
    return [_sweep_task(p) for p in payloads]


def format_sweep(rows, fmt):
    buf = io.StringIO()
    if fmt == "json":
        buf.write(json.dumps({"version": 1, "columns": SWEEP_COLUMNS, "rows": rows},
                             sort_keys=True, indent=1) + "\n")
        return buf.getvalue()
    buf.write(SWEEP_HEADER + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for row in rows:
        w.writerow([_fmt_value(row[c]) for c in SWEEP_COLUMNS])
    return buf.getvalue()


def cmd_sweep(args, out):
    try:
        with open(args.config) as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise PreconditionError(f"cannot read sweep config: {exc}", "readable JSON config")
    fmt = args.format or config.get("format", "csv")
    if fmt == "table":
        fmt = "csv"
    text = format_sweep(run_sweep(config, args.jobs), fmt)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def build_parser():
    p = argparse.ArgumentParser(prog="cyclicrank",
                                description="Rank computations for families of cyclic covers.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("report", help="rank report for moving k of m branch points")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--branch", help="comma-separated branch points (rationals p/q or inf)")
    r.add_argument("--moving", type=_int_list, help="1-based positions of the moving points")
    r.add_argument("--certify", choices=CERTIFY_LEVELS, default="none")
    r.add_argument("--format", choices=("table", "json", "csv"), default="table")
    r.set_defaults(func=cmd_report)

    c = sub.add_parser("cd", help="four-point standard case")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("table", "json", "csv"), default="table")
    c.set_defaults(func=cmd_cd)

    h = sub.add_parser("hurwitz", help="braid orbit of a permutation tuple")
    h.add_argument("--tuple", help='positions separated by ";", e.g. "(1 2);(1 2)"')
    h.add_argument("--cyclic", type=_int_list, help="n,m for m copies of an n-cycle")
    h.add_argument("--k", type=int, default=0, help="number of moving positions")
    h.add_argument("--policy", choices=hurwitz.POLICIES, default="standard")
    h.add_argument("--cap", type=int, default=hurwitz.DEFAULT_CAP)
    h.add_argument("--format", choices=("table", "json", "csv"), default="json")
    h.set_defaults(func=cmd_hurwitz)

    s = sub.add_parser("sweep", help="grid sweep from a JSON config")
    s.add_argument("config")
    s.add_argument("--format", choices=("table", "json", "csv"))
    s.add_argument("--output")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, out)
    except OracleMismatchError as exc:
        print(f"error: oracle mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except CycleParseError as exc:
        print(f"error: malformed cycle notation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PreconditionError as exc:
        cond = f" [violated: {exc.condition}]" if exc.condition else ""
        print(f"error: {exc}{cond}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
