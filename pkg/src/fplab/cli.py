"""Command-line front end: check, enumerate (alias classify), graphs, examples.

Exit codes are 0 when everything passes, 1 when a filter fails and 2 for
usage, I/O and parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from fplab.families import (
    MATCH_ORDER,
    ParameterConstraintViolated,
    UnknownExample,
    example,
)
from fplab.fpdata import ParseError, parse_data, serialize_data, to_document
from fplab.genus import NonConstant, chi_vector, classical_invariants
from fplab.multigraph import enumerate_admissible, to_dot
from fplab.search import DEFAULT_FILTERS, SearchSpec, classify_all, default_workers, run_pipeline

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class OddDimension(ValueError):
    pass


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load(path: str):
    try:
        return parse_data(_read(path))
    except ParseError as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from None


def _invariants(d):
    try:
        chi = chi_vector(d)
    except NonConstant:
        return None, None
    return chi, classical_invariants(chi)


def cmd_check(args) -> int:
    d = _load(args.path)
    report = run_pipeline(d, DEFAULT_FILTERS, full_eval=args.full_eval)
    chi, inv = _invariants(d)
    if args.json:
        out = {"data": to_document(d), "survivor": report.survivor,
               "filters": report.to_json(),
               "chi": [int(x) for x in chi.values] if chi else None,
               "invariants": {k: int(v) for k, v in inv._asdict().items()} if inv else None}
        print(json.dumps(out, indent=2))
    else:
        print(f"data: {d}")
        for v in report.verdicts:
            line = f"  {v.name:<15} {v.status.value}"
            if v.message:
                line += f"  {v.message}"
            if v.failed and v.certificate is not None:
                line += f"  {json.dumps(v.certificate, separators=(',', ':'))}"
            print(line)
        if inv:
            print(f"chi: {[int(x) for x in chi.values]}")
            print(f"Todd={inv.todd} Euler={inv.euler} signature={inv.signature}")
        else:
            print("chi_y genus is not rigid for this data; no invariants")
    return EXIT_OK if report.survivor else EXIT_FAIL


def _summary_rows(report):
    order = {f: i for i, f in enumerate(MATCH_ORDER)}
    rows = []
    for s in report.survivors:
        for m in s.matches:
            rows.append((order[m.family], m.parameters, m.family.value, m.orientation,
                         str(s.data)))
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def cmd_enumerate(args) -> int:
    if args.dim <= 0:
        raise UsageError("--dim must be positive")
    if args.dim % 2:
        raise OddDimension(f"dimension {args.dim} is odd; almost complex manifolds are even-dimensional")
    workers = args.threads if args.threads else default_workers()
    cap = os.environ.get("FPLAB_THREADS")
    if cap and cap.isdigit() and int(cap) > 0:
        workers = min(workers, int(cap))
    try:
        spec = SearchSpec(n=args.dim // 2, k=args.points, max_weight=args.max_weight,
                          todd=args.todd, full_eval=args.full_eval, workers=max(1, workers))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = classify_all(spec)
    if args.jsonl == "-":
        sys.stdout.write(report.jsonl())
        out = sys.stderr
    else:
        if args.jsonl:
            Path(args.jsonl).write_text(report.jsonl(), encoding="utf-8")
        out = sys.stdout
    s = report.summary()
    print(f"dim={args.dim} points={spec.k} max_weight={spec.max_weight} todd={spec.todd}", file=out)
    print(f"candidates={s['candidates']} survivors={s['survivors']}", file=out)
    for _, params, fam, orient, data in _summary_rows(report):
        print(f"  {fam:<10} {str(list(params)):<16} {orient:<8} {data}", file=out)
    print("family counts:", file=out)
    for fam in MATCH_ORDER:
        if fam.value in s["families"]:
            print(f"  {fam.value:<10} {s['families'][fam.value]}", file=out)
    print(f"unclassified={s['unclassified']}", file=out)
    for sv in report.unclassified:
        print(f"  {sv.data}", file=out)
    return EXIT_OK


def cmd_graphs(args) -> int:
    d = _load(args.path)
    balance = run_pipeline(d, ("balance",))
    if not balance.survivor:
        v = balance.first_failure
        print(f"balance failure: {v.message} {json.dumps(v.certificate)}")
        return EXIT_FAIL
    graphs = enumerate_admissible(d)
    print(f"admissible multigraphs: {len(graphs)}")
    for i, g in enumerate(graphs, 1):
        edges = ", ".join(f"{s}->{t}:{w}" for s, t, w in g.edges)
        print(f"  graph {i:03d}: {edges}")
    if args.dot:
        target = Path(args.dot)
        target.mkdir(parents=True, exist_ok=True)
        for i, g in enumerate(graphs, 1):
            name = f"graph_{i:03d}"
            (target / f"{name}.dot").write_text(to_dot(g, name), encoding="utf-8")
    return EXIT_OK if graphs else EXIT_FAIL


def cmd_examples(args) -> int:
    try:
        d = example(args.name, *args.params)
    except UnknownExample as exc:
        raise UsageError(exc.args[0]) from None
    except (ParameterConstraintViolated, ValueError) as exc:
        raise UsageError(str(exc)) from None
    print(serialize_data(d) if args.compact else json.dumps(to_document(d), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fplab",
                                     description="Fixed point data of circle actions: filters and search.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run every filter on one data file")
    p.add_argument("path", help="JSON data file, or - for stdin")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--full-eval", action="store_true", help="do not stop at the first failure")
    p.set_defaults(func=cmd_check)

    for name in ("enumerate", "classify"):
        p = sub.add_parser(name, help="bounded search and family matching")
        p.add_argument("--dim", type=int, required=True, help="real dimension 2n")
        p.add_argument("--points", type=int, required=True, help="number of fixed points")
        p.add_argument("--max-weight", type=int, required=True)
        p.add_argument("--todd", type=int, choices=(0, 1))
        p.add_argument("--full-eval", action="store_true")
        p.add_argument("--jsonl", metavar="OUT", help="write survivors as JSON lines (- for stdout)")
        p.add_argument("--threads", type=int, default=0, help="worker processes")
        p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("graphs", help="list admissible multigraphs")
    p.add_argument("path")
    p.add_argument("--dot", metavar="DIR", help="write one DOT file per multigraph")
    p.set_defaults(func=cmd_graphs)

    p = sub.add_parser("examples", help="print a named example as JSON")
    p.add_argument("name")
    p.add_argument("params", nargs="*")
    p.add_argument("--compact", action="store_true")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, OddDimension) as exc:
        label = "OddDimension: " if isinstance(exc, OddDimension) else ""
        print(f"error: {label}{exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
