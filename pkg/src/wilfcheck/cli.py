"""Command-line interface.

Exit codes: 0 all checks hold, 1 counterexample or oracle mismatch,
2 usage or input error. Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import shlex
import sys
import time

from . import bounds as bnd
from .core import FULL, parse_semigroup
from .enumeration import (BRUTEFORCE_CAP, count_by_genus, enumerate_bruteforce,
                          extremal, scan, walk)
from .errors import SemigroupError
from .invariants import invariants_of, sporadic_elements, wilf_number
from .lemma import build_witness_cover, verify_lemma_bound
from .report import (SCHEMA_VERSION, ReportDocument, bound_check_to_dict,
                     bound_checks_csv, invariants_to_dict, lemma_chain_to_dict,
                     rational, scan_report_to_dict, scan_rows_csv, to_csv,
                     witness_cover_to_dict)

THREADS_ENV = "WILF_THREADS"


class UsageError(Exception):
    pass


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        try:
            return len(os.sched_getaffinity(0))
        except AttributeError:
            return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _threads(args) -> int:
    if args.threads is not None:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return args.threads
    return _default_threads()


def _parse_bounds(text: str) -> list[bnd.BoundId] | None:
    if text.strip().lower() == "all":
        return None
    try:
        return [bnd.BoundId.parse(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(doc: ReportDocument, csv_text: str | None, fmt: str) -> None:
    sys.stdout.write(csv_text if fmt == "csv" else doc.to_json())


def cmd_inspect(args, command: str) -> int:
    try:
        s = parse_semigroup(args.generators)
        inv = invariants_of(s)
    except (SemigroupError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    checks = bnd.check_all(inv)
    cover = build_witness_cover(s)
    chain = verify_lemma_bound(cover, inv)
    ok = all(c.holds for c in checks) and chain.holds
    payload = {
        "kind": "inspect",
        "semigroup": str(s),
        "invariants": invariants_to_dict(inv),
        "gaps": s.gaps(),
        "sporadic": list(sporadic_elements(s)),
        "wilf_number": wilf_number(s),
        "bounds": [bound_check_to_dict(c) for c in checks],
        "witness_cover": witness_cover_to_dict(cover),
        "lemma_chain": lemma_chain_to_dict(chain),
        "all_hold": ok,
    }
    doc = ReportDocument(SCHEMA_VERSION, command, payload)
    _emit(doc, bound_checks_csv(checks) if args.format == "csv" else None, args.format)
    return 0 if ok else 1


def cmd_verify(args, command: str) -> int:
    if args.max_genus < 1:
        raise UsageError("--max-genus must be at least 1")
    selection = _parse_bounds(args.bounds)
    report = scan(args.max_genus, selection, worker_count=_threads(args),
                  check_cover=not args.no_cover, collect_rows=args.format == "csv")
    doc = ReportDocument(SCHEMA_VERSION, command, scan_report_to_dict(report))
    _emit(doc, scan_rows_csv(report) if args.format == "csv" else None, args.format)
    for cx in report.counterexamples:
        print(f"counterexample: {cx.label} (genus {cx.genus}) violates {cx.bound}, "
              f"slack {cx.slack}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_count(args, command: str) -> int:
    if args.max_genus < 0:
        raise UsageError("--max-genus must be nonnegative")
    started = time.perf_counter()
    counts = count_by_genus(args.max_genus)
    payload = {
        "kind": "count",
        "genus_bound": args.max_genus,
        "counts_per_genus": counts,
        "total": sum(counts),
    }
    status = 0
    if args.oracle_check is not None:
        m = args.oracle_check
        if m < 0:
            raise UsageError("--oracle-check must be nonnegative")
        if m > BRUTEFORCE_CAP:
            raise UsageError(f"--oracle-check {m} exceeds the brute-force cap {BRUTEFORCE_CAP}")
        by_genus = {g: [] for g in range(m + 1)}
        for s in walk(FULL, m):
            by_genus[s.genus].append(s.atoms)
        oracle_counts = []
        agrees = True
        for g in range(m + 1):
            brute = [s.atoms for s in enumerate_bruteforce(g)]
            oracle_counts.append(len(brute))
            if sorted(by_genus[g]) != brute:
                agrees = False
        payload["oracle"] = {"max_genus": m, "counts_per_genus": oracle_counts, "agrees": agrees}
        print("oracle agrees" if agrees else "oracle MISMATCH", file=sys.stderr)
        status = 0 if agrees else 1
    payload["wall_time"] = round(time.perf_counter() - started, 3)
    doc = ReportDocument(SCHEMA_VERSION, command, payload)
    csv_text = to_csv(["genus", "count"], [[g, n] for g, n in enumerate(counts)])
    _emit(doc, csv_text, args.format)
    return status


def cmd_extremal(args, command: str) -> int:
    if args.max_genus < 1:
        raise UsageError("--max-genus must be at least 1")
    if args.top < 1:
        raise UsageError("--top must be at least 1")
    try:
        metric = bnd.BoundId.parse(args.metric)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    best = extremal(args.max_genus, metric, args.top, worker_count=_threads(args))
    rows = [{"rank": i, "semigroup": str(s), "genus": s.genus, "slack": rational(slack)}
            for i, (s, slack) in enumerate(best, 1)]
    payload = {"kind": "extremal", "genus_bound": args.max_genus,
               "metric": metric.value, "top": args.top, "rows": rows}
    doc = ReportDocument(SCHEMA_VERSION, command, payload)
    csv_text = to_csv(["rank", "atom_list", "genus", "slack_num", "slack_den"],
                      [[r["rank"], r["semigroup"], r["genus"], r["slack"]["num"],
                        r["slack"]["den"]] for r in rows])
    _emit(doc, csv_text, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wilfcheck",
        description="Verify Wilf-density bounds on numerical semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, threads=True):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if threads:
            p.add_argument("--threads", type=int, default=None,
                           help=f"worker processes (default: ${THREADS_ENV} or CPU count)")

    p = sub.add_parser("inspect", help="invariants, bound checks and witness cover of one semigroup")
    p.add_argument("generators", help="comma-separated generators, e.g. 3,5,7")
    common(p, threads=False)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("verify", help="check bounds on every semigroup up to a genus")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--bounds", default="all", help="comma-separated bound names or 'all'")
    p.add_argument("--no-cover", action="store_true", help="skip the witness-cover check")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="number of semigroups per genus")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--oracle-check", type=int, default=None, metavar="M",
                   help="cross-check genus <= M against brute force")
    common(p, threads=False)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("extremal", help="smallest-slack semigroups for one bound")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--metric", required=True)
    p.add_argument("--top", type=int, default=10)
    common(p)
    p.set_defaults(func=cmd_extremal)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, shlex.join(argv))
    except UsageError as exc:
        print(f"wilfcheck: error: {exc}", file=sys.stderr)
        return 2
    except SemigroupError as exc:
        print(f"wilfcheck: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
