"""Command-line front end.

Subcommands:
    count      exact path counts (2-D closed forms or any-dimension)
    enumerate  brute-force listing on small boxes
    genfun     path-length polynomial coefficients as CSV or JSON
    sequence   the mex-built 2-D sequence as CSV
    decompose  legal decompositions of an integer over the sequence grid
    clt        exact-vs-asymptotic sweep along a ray q = c*n, as CSV
    verify     run the cross-module invariant suite

Exit codes: 0 success, 1 guard violation or failed verification,
2 usage error.  All numbers print with a dot decimal separator and no
grouping; reals use 12 significant digits, counts print in full.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bruteforce, cltlab, genfunc, pathcount, verify, zeckseq
from .errors import GuardError


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _point(text: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated point: {text!r}")
    if not coords or any(x < 0 for x in coords):
        raise argparse.ArgumentTypeError(f"bad point: {text!r}")
    return coords


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")


def _real(x: float) -> str:
    return format(x, ".12g")


def _rational(x: Fraction) -> str:
    return format(float(x), ".12g")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jumppaths",
        description="Exact jump-path counting and Gaussian-limit checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="exact path counts")
    p_count.add_argument("--p", type=_nonneg_int)
    p_count.add_argument("--q", type=_nonneg_int)
    p_count.add_argument("--point", type=_point, help="comma-separated coordinates")
    p_count.add_argument("--n", type=_nonneg_int, help="path length (kinds u and g)")
    p_count.add_argument("--kind", choices=["u", "g", "total"], default="total")

    p_enum = sub.add_parser("enumerate", help="brute-force path listing")
    p_enum.add_argument("--p", type=_nonneg_int, required=True)
    p_enum.add_argument("--q", type=_nonneg_int, required=True)
    p_enum.add_argument("--restricted", action="store_true")
    p_enum.add_argument("--list", action="store_true", dest="list_paths")

    p_gf = sub.add_parser("genfun", help="path-length polynomial")
    p_gf.add_argument("--p", type=_nonneg_int, required=True)
    p_gf.add_argument("--q", type=_nonneg_int, required=True)
    p_gf.add_argument("--format", choices=["csv", "json"], default="csv")

    p_seq = sub.add_parser("sequence", help="mex-built 2-D sequence")
    p_seq.add_argument("--diagonals", type=_pos_int, required=True)
    p_seq.add_argument("--format", choices=["csv"], default="csv")

    p_dec = sub.add_parser("decompose", help="legal decompositions")
    p_dec.add_argument("--value", type=_pos_int, required=True)
    p_dec.add_argument("--diagonals", type=_pos_int, required=True)
    p_dec.add_argument("--list", action="store_true", dest="list_chains")

    p_clt = sub.add_parser("clt", help="exact-vs-asymptotic sweep")
    p_clt.add_argument("--c", type=float, required=True)
    p_clt.add_argument("--n-list", type=_int_list, required=True)
    p_clt.add_argument("--out", help="write CSV here instead of stdout")

    p_ver = sub.add_parser("verify", help="cross-module invariant suite")
    p_ver.add_argument("--max-pq", type=_pos_int, default=12)

    return parser


def _cmd_count(args, parser) -> int:
    if args.point is not None:
        if args.p is not None or args.q is not None:
            parser.error("--point excludes --p/--q")
        if args.kind == "u":
            parser.error("kind u is two-dimensional only; use --p/--q")
        if args.kind == "g":
            if args.n is None:
                parser.error("kind g needs --n")
            print(pathcount.restricted_count(args.point, args.n))
        else:
            if args.n is not None:
                parser.error("--n is only meaningful for kinds u and g")
            print(pathcount.total_paths(args.point))
        return 0
    if args.p is None or args.q is None:
        parser.error("need --p and --q (or --point)")
    if args.kind == "total":
        if args.n is not None:
            parser.error("--n is only meaningful for kinds u and g")
        print(pathcount.total_paths((args.p, args.q)))
    else:
        if args.n is None:
            parser.error(f"kind {args.kind} needs --n")
        if args.kind == "u":
            print(pathcount.unrestricted_count(args.p, args.q, args.n))
        else:
            print(pathcount.restricted_count_2d(args.p, args.q, args.n))
    return 0


def _format_path(path) -> str:
    return "->".join("(" + ",".join(str(x) for x in pt) + ")" for pt in path)


def _cmd_enumerate(args) -> int:
    if args.restricted:
        paths = bruteforce.enumerate_restricted((args.p, args.q))
    else:
        paths = bruteforce.enumerate_unrestricted((args.p, args.q))
    print(len(paths))
    if args.list_paths:
        for path in paths:
            print(_format_path(path))
    return 0


def _cmd_genfun(args) -> int:
    poly = genfunc.path_length_poly(args.p, args.q).poly
    coeffs = list(poly.coefficients) or [0]
    if args.format == "json":
        print(json.dumps([str(c) for c in coeffs]))
    else:
        print("k,count")
        for k, c in enumerate(coeffs):
            print(f"{k},{c}")
    return 0


def _cmd_sequence(args) -> int:
    grid = zeckseq.build_sequence(args.diagonals)
    print("x,y,order,value")
    for idx, (x, y) in enumerate(grid.placement_order):
        print(f"{x},{y},{idx},{grid.values[(x, y)]}")
    return 0


def _cmd_decompose(args) -> int:
    grid = zeckseq.build_sequence(args.diagonals)
    chains = zeckseq.decompositions(args.value, grid)
    print(len(chains))
    if args.list_chains:
        for dec in chains:
            print(
                "+".join(
                    f"{grid.values[pt]}@({pt[0]},{pt[1]})" for pt in dec.points
                )
            )
    return 0


def _cmd_clt(args) -> int:
    rows = cltlab.convergence_report(args.c, args.n_list)
    lines = ["n,p,q,mean_exact,mean_asymp,var_exact,var_asymp,ks,tail_mass"]
    for row in rows:
        lines.append(
            ",".join(
                [
                    str(row.p),
                    str(row.p),
                    str(row.q),
                    _rational(row.mean_exact),
                    _real(row.mean_asymp),
                    _rational(row.var_exact),
                    _real(row.var_asymp),
                    _real(row.ks_distance),
                    _real(row.tail_mass),
                ]
            )
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    failures = verify.run_all(max_pq=args.max_pq)
    for line in failures:
        print(f"FAIL: {line}")
    if failures:
        print(f"verification failed: {len(failures)} problem(s)")
        return 1
    print(f"verification passed (max-pq={args.max_pq})")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(args, parser)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "genfun":
            return _cmd_genfun(args)
        if args.command == "sequence":
            return _cmd_sequence(args)
        if args.command == "decompose":
            return _cmd_decompose(args)
        if args.command == "clt":
            return _cmd_clt(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except GuardError as exc:
        print(f"guard violation: {exc}", file=sys.stderr)
        return 1
    except zeckseq.InsufficientGridError as exc:
        print(f"insufficient grid: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        parser.error(str(exc))
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
