"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure or violated map precondition,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting
from .bijection import PreconditionError, forward_map, inverse_map
from .core import format_partition, parse_partition
from .diagram import render_plain, render_shifted
from .verification import IDENTITIES, verify_identity

FAMILIES = ("p", "p_k", "p_min", "d_distant", "polarized", "s_class")


def _partition_arg(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polarpart",
        description="Count, enumerate, map and verify d-distant and polarized partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="print a partition count")
    count.add_argument("--family", required=True, choices=FAMILIES)
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--d", type=int)
    count.add_argument("--r", type=int)
    count.add_argument("--k", type=int)
    count.add_argument("--json", action="store_true", help="wrap the value as JSON")

    for name, text in (("map", "d-distant -> polarized"), ("unmap", "polarized -> d-distant")):
        cmd = sub.add_parser(name, help=text)
        cmd.add_argument("--partition", required=True, type=_partition_arg)
        cmd.add_argument("--d", type=int, default=2)
        cmd.add_argument("--r", type=int, default=1)

    verify = sub.add_parser("verify", help="sweep an identity over n = 1..n-max")
    verify.add_argument("--identity", required=True, choices=IDENTITIES)
    verify.add_argument("--n-max", type=int, required=True)
    verify.add_argument("--d", type=int)
    verify.add_argument("--r", type=int)
    fmt = verify.add_mutually_exclusive_group()
    fmt.add_argument("--table", action="store_true", help="aligned text instead of JSON")
    fmt.add_argument("--csv", action="store_true", help="CSV rows: n,lhs,rhs,equal")
    verify.add_argument("--jobs", type=int, default=1)

    diagram = sub.add_parser("diagram", help="ASCII Young diagram")
    diagram.add_argument("--partition", required=True, type=_partition_arg)
    diagram.add_argument("--shifted", action="store_true")
    diagram.add_argument("--d", type=int, default=2)
    diagram.add_argument("--r", type=int, default=1)
    return parser


def _count(args, parser):
    n, d, r, k = args.n, args.d, args.r, args.k
    if n < 0:
        parser.error("--n must be >= 0")
    if r is not None and r < 1:
        parser.error("--r must be >= 1")
    if k is not None and k < 0:
        parser.error("--k must be >= 0")
    family = args.family
    params = {"n": n}
    if family == "p":
        value = counting.count_p(n)
    elif family == "p_k":
        if k is None:
            parser.error("family p_k needs --k")
        value = counting.count_p_k(n, k)
        params["k"] = k
    elif family == "p_min":
        r = 1 if r is None else r
        value = counting.count_p_min(n, r)
        params["r"] = r
    elif family == "d_distant":
        if d is None or d < 0:
            parser.error("family d_distant needs --d >= 0")
        r = 1 if r is None else r
        if k is None:
            value = counting.count_d_distant(n, d, r)
        else:
            value = counting.count_p_k(n - d * k * (k - 1) // 2 - (r - 1) * k, k)
            params["k"] = k
        params.update(d=d, r=r)
    elif family == "polarized":
        value = counting.count_polarized(n, k)
        if k is not None:
            params["k"] = k
    else:
        if d is None or d < 2:
            parser.error("family s_class needs --d >= 2")
        value = counting.count_s_class(n, d)
        params["d"] = d
    if args.json:
        print(json.dumps({"family": family, "params": params, "value": value}))
    else:
        print(value)
    return 0


def _map(args, parser):
    if args.d < 2 or args.r < 1:
        parser.error("need --d >= 2 and --r >= 1")
    fn = forward_map if args.command == "map" else inverse_map
    try:
        result = fn(args.partition, args.d, args.r)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(format_partition(result))
    return 0


def _verify(args, parser):
    if args.n_max < 1:
        parser.error("--n-max must be >= 1")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        report = verify_identity(args.identity, args.n_max, args.d, args.r, jobs=args.jobs)
    except ValueError as exc:
        parser.error(str(exc))
    if args.table:
        print(report.to_table())
    elif args.csv:
        sys.stdout.write(report.to_csv())
    else:
        print(report.to_json())
    return 0 if report.all_equal else 1


def _diagram(args, parser):
    if not args.shifted:
        print(render_plain(args.partition))
        return 0
    if args.d < 2 or args.r < 1:
        parser.error("need --d >= 2 and --r >= 1")
    try:
        print(render_shifted(args.partition, args.d, args.r))
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"count": _count, "map": _map, "unmap": _map,
               "verify": _verify, "diagram": _diagram}[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
