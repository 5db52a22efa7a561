"""Command-line harness: verify, sample, count, classify, enumerate.

Exit codes: 0 when every check passes, 1 when some check fails, 2 for usage
errors and guard violations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import experiments as ex
from .classifier import classify_graph
from .errors import DecompositionError, GraphFormatError, GuardError, PreconditionError
from .graph_core import parse_graph
from .partitions import (
    HierarchyConstants,
    OrderedPartition,
    load_constants,
    local_improve,
    optimal_partition,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_range(text: str) -> list[int]:
    """'7' -> 1..7, '3..9' -> 3..9, '' -> empty."""
    text = text.strip()
    if not text:
        return []
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return list(range(1, int(text) + 1))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(args, payload, started: float) -> str:
    spec = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "out", "jobs")}
    rep = {"spec": spec, "payload": payload, "payload_sha256": ex.digest(payload),
           "wall_time_s": round(time.perf_counter() - started, 3)}
    return json.dumps(rep, sort_keys=True, indent=1) + "\n"


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


# ------------------------------------------------------------------ commands


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    sel = list(ex.SUITES) if args.suites == ["all"] else args.suites
    try:
        payload = ex.run_suites(sel)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    _emit(_report(args, payload, t0), args.out)
    for name, res in payload.items():
        print(f"{name}: {'PASS' if not res['failures'] else 'FAIL'}", file=sys.stderr)
    return EXIT_FAIL if any(r["failures"] for r in payload.values()) else EXIT_OK


def cmd_sample(args) -> int:
    _require(args, "n", "k")
    t0 = time.perf_counter()
    payload = ex.sample_templates(args.n, args.k, args.count, args.seed, args.jobs)
    _emit(_report(args, payload, t0), args.out)
    return EXIT_FAIL if payload["with_induced_cycle"] else EXIT_OK


def cmd_count(args) -> int:
    _require(args, "k")
    ns = _parse_range(args.n or "")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ex.COUNT_HEADER)
    rows = ex.count_rows(ns, args.k)
    w.writerows(rows)
    _emit(buf.getvalue(), args.out)
    bad = [r for r in rows if r[3] != r[4] or r[5] == 0]
    return EXIT_FAIL if bad else EXIT_OK


def _constants(args) -> HierarchyConstants:
    if args.constants:
        c = load_constants(args.constants)
    elif args.preset:
        c = ex.constants_for(args.preset, args.k or 4)
    else:
        c = HierarchyConstants()
    if args.k is not None and args.k != c.k:
        c = c.with_values(k=args.k)
    return c


def _partition_for(g, k: int, how: str, override: bool) -> OrderedPartition:
    if how == "balanced":
        return local_improve(g, OrderedPartition.balanced(g.n, k))
    if how == "optimal":
        return optimal_partition(g, k, mode="exact", override_guards=override)[0]
    return optimal_partition(g, k, mode="local")[0]


def cmd_classify(args) -> int:
    if args.input is None:
        _require(args, "count")
        t0 = time.perf_counter()
        payload = ex.classifier_campaign(args.count, args.seed, args.jobs)
        _emit(_report(args, payload, t0), args.out)
        bad = [it for it in payload["items"] if not it.get("dichotomy", {"ok": True})["ok"]]
        return EXIT_FAIL if bad else EXIT_OK
    c = _constants(args)
    fh = sys.stdin if args.input == "-" else open(args.input, encoding="ascii")
    parts = None
    if args.partition_file:
        with open(args.partition_file, encoding="utf-8") as pf:
            parts = [OrderedPartition.from_json(line) for line in pf if line.strip()]
    lines = []
    try:
        idx = 0
        for raw in fh:
            if not raw.strip():
                continue
            g = parse_graph(raw.strip())
            if parts is not None:
                if idx >= len(parts):
                    raise UsageError("partition file has fewer lines than the graph stream")
                q = parts[idx]
            else:
                q = _partition_for(g, c.k, args.partition, args.override_guards)
            v = classify_graph(g, q, c, override_guards=args.override_guards)
            lines.append(v.to_json(g))
            idx += 1
    finally:
        if fh is not sys.stdin:
            fh.close()
    _emit("".join(line + "\n" for line in lines), args.out)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    _require(args, "n", "k")
    t0 = time.perf_counter()
    payload = ex.enumerate_report(args.n, args.k, args.override_guards)
    _emit(_report(args, payload, t0), args.out)
    bad = [s for s in payload["per_shape"] if s["formula"] != s["enumerated"]]
    return EXIT_FAIL if bad else EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--count", type=int)
    common.add_argument("--constants", help="key=value constants file")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=ex.default_jobs(),
                        help="worker processes (default: $ISLAB_JOBS or 1)")
    common.add_argument("--override-guards", action="store_true")

    p = argparse.ArgumentParser(prog="islab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run exhaustive suites")
    v.add_argument("suites", nargs="*", help=f"any of {', '.join(ex.SUITES)}, or 'all'")
    v.add_argument("--n", type=int)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", parents=[common], help="sample templates and look for induced C_2k")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_sample, count=1000)

    c = sub.add_parser("count", parents=[common], help="CSV of f_k(n) and Turan numbers")
    c.add_argument("--n", help="'7' for 1..7 or 'a..b'")
    c.set_defaults(func=cmd_count)

    cl = sub.add_parser("classify", parents=[common], help="classify graph6 lines, or a seeded campaign")
    cl.add_argument("input", nargs="?", help="graph6/sparse6 file, '-' for stdin; omit for a campaign")
    cl.add_argument("--partition", choices=("balanced", "optimal", "local"), default="balanced")
    cl.add_argument("--partition-file", help="one partition JSON per graph line")
    cl.add_argument("--preset", choices=("dichotomy", "coarse"), help="desk constants instead of a file")
    cl.add_argument("--n", type=int)
    cl.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate", parents=[common], help="|T(n,k)| and |T_Q| per partition shape")
    e.add_argument("--n", type=int)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"guard violated: {exc.guard}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, GraphFormatError, PreconditionError, DecompositionError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
