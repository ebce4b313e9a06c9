"""Command-line front end.

Exit codes: 0 success, 1 a verification failure, 2 malformed input,
3 the inclusion-exclusion subset cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .chromatic import SubsetCapExceeded, chromatic_oracle, chromatic_r_expansion, chromatic_sym, tutte_sym
from .graphs import parse_graph
from .partitions import Partition
from .symfunc import Basis, SymExpr, convert, transition_matrix
from .sweeps import SWEEPS, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _basis(text: str) -> Basis:
    try:
        return Basis.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_json(ref: str):
    path = Path(ref[1:] if ref.startswith("@") else ref)
    try:
        return json.loads(path.read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def cmd_expand(args, out) -> int:
    g = parse_graph(args.graph)
    if args.basis is Basis.R:
        expr = chromatic_r_expansion(g)
    else:
        expr = convert(chromatic_sym(g), args.basis)
    print(_dump(expr.to_json()), file=out)
    return EXIT_OK


def cmd_tutte(args, out) -> int:
    print(_dump(tutte_sym(parse_graph(args.graph)).to_json()), file=out)
    return EXIT_OK


def cmd_convert(args, out) -> int:
    if (args.partition is None) == (args.expr is None):
        raise InputError("convert needs exactly one of --partition or @expr.json")
    if args.partition is not None:
        if args.source is None:
            raise InputError("--from is required with --partition")
        expr = SymExpr.single(args.source, Partition.parse(args.partition))
    else:
        expr = SymExpr.from_json(_load_json(args.expr))
        if args.source is not None and args.source is not expr.basis:
            raise InputError(f"--from {args.source.value} does not match the file's basis {expr.basis.value}")
    print(_dump(convert(expr, args.target).to_json()), file=out)
    return EXIT_OK


def cmd_matrix(args, out) -> int:
    if args.degree < 0:
        raise InputError("--degree must be nonnegative")
    tm = transition_matrix(args.degree, args.source, args.target)
    if args.format == "csv":
        out.write(tm.to_csv())
    else:
        print(_dump(tm.to_json()), file=out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    if args.vars < 1:
        raise InputError("--vars must be positive")
    poly = chromatic_oracle(parse_graph(args.graph), args.vars)
    terms = [{"exponents": list(e), "coeff": str(c)} for e, c in sorted(poly.items(), reverse=True)]
    print(_dump({"vars": args.vars, "terms": terms}), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_n < 0:
        raise InputError("--max-n must be nonnegative")
    names = list(SWEEPS) if args.identity == "all" else [args.identity]
    first_failure = None
    rows = []
    for name in names:
        verdicts = run_sweep(name, args.max_n, seed=args.seed, jobs=args.jobs)
        passed = sum(v.passed for v in verdicts)
        rows.append((name, len(verdicts), passed))
        for v in verdicts:
            if args.records:
                print(_dump(v.to_json()), file=out)
            if first_failure is None and not v.passed:
                first_failure = v
    width = max(len(r[0]) for r in rows)
    print(f"{'identity':<{width}}  {'checked':>8}  {'passed':>8}  {'failed':>8}", file=out)
    for name, total, passed in rows:
        print(f"{name:<{width}}  {total:>8}  {passed:>8}  {total - passed:>8}", file=out)
    print(f"seed={args.seed} max_n={args.max_n}", file=out)
    if first_failure is not None:
        print(f"FAILED: {_dump(first_failure.to_json())}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multisym",
        description="Exact r-basis, chromatic and Tutte symmetric function computations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    graph_help = "path:4, cycle:5, complete:3, multipartite:2,2,1, empty:4, or @graph.json"

    p = sub.add_parser("expand", help="chromatic symmetric function of a graph")
    p.add_argument("--graph", required=True, help=graph_help)
    p.add_argument("--basis", type=_basis, default=Basis.MT)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("tutte", help="Tutte symmetric function in (1+t)^i mtilde terms")
    p.add_argument("--graph", required=True, help=graph_help)
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("convert", help="change the basis of a basis element or expression")
    p.add_argument("--from", dest="source", type=_basis)
    p.add_argument("--to", dest="target", type=_basis, required=True)
    p.add_argument("--partition", help='e.g. "2,1"; "" is the empty partition')
    p.add_argument("expr", nargs="?", help="@expr.json")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("matrix", help="transition matrix in one degree")
    p.add_argument("--from", dest="source", type=_basis, required=True)
    p.add_argument("--to", dest="target", type=_basis, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="run identity verification sweeps")
    p.add_argument("identity", choices=["all", *SWEEPS])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--records", action="store_true", help="print one JSON verdict per line")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force coloring expansion in N variables")
    p.add_argument("--graph", required=True, help=graph_help)
    p.add_argument("--vars", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except SubsetCapExceeded as exc:
        print(f"multisym: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"multisym: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
