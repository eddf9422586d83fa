"""Command-line entry point: ``lrsnake {phi,lr,verify}``.

Exit codes: 0 on success, 1 when a verification suite reports failures,
2 on usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .lr import LRQuery, lr_coeff, lr_family
from .tropical import PhiParams, phi, phi_trace
from .tuples import format_tuple, parse_tuple
from .verify import SUITES, run_suite


def _tuple_arg(text: str):
    try:
        return parse_tuple(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="dimension; inferred from tuple length when omitted")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV output")
    p.set_defaults(fmt=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrsnake", description="Tropical involutions and LR coefficient symmetries.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", help="evaluate phi(omega) = f_mu(omega - a) + b")
    _add_common(p)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--mu", type=_tuple_arg, required=True)
    p.add_argument("--omega", type=_tuple_arg, required=True)
    p.add_argument("--trace", action="store_true", help="also print nu, tau and eta")

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient c^lambda_{mu,nu}")
    _add_common(p)
    p.add_argument("--mu", type=_tuple_arg, required=True)
    p.add_argument("--nu", type=_tuple_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=_tuple_arg, help="omit to list the whole family")

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p)
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--lo", type=int)
    p.add_argument("--hi", type=int)
    p.add_argument("--max-ab", type=int)
    p.add_argument("--max-mu1", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="random points per n (birational, rmatrix)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the main sweep")
    return parser


def _resolve_n(parser, args, *tuples) -> int:
    lengths = {len(t) for t in tuples if t is not None}
    if args.n is not None:
        lengths.add(args.n)
    if len(lengths) != 1:
        parser.error(f"tuple lengths and --n disagree: {sorted(lengths)}")
    return lengths.pop()


def _emit_rows(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_phi(parser, args) -> int:
    n = _resolve_n(parser, args, args.mu, args.omega)
    try:
        params = PhiParams(n, args.a, args.b, args.mu)
    except ValueError as exc:
        parser.error(str(exc))
    if args.trace:
        tr = phi_trace(params, args.omega)
        fields = {"omega": args.omega, "nu": tr.nu, "tau": tr.tau, "eta": tr.eta, "phi": tr.result}
    else:
        fields = {"omega": args.omega, "phi": phi(params, args.omega)}
    if args.fmt == "json":
        print(json.dumps({k: format_tuple(v) for k, v in fields.items()}))
    elif args.fmt == "csv":
        print(_emit_rows(list(fields), [[format_tuple(v) for v in fields.values()]]))
    elif args.trace:
        for k, v in fields.items():
            print(f"{k}: {format_tuple(v)}")
    else:
        print(format_tuple(fields["phi"]))
    return 0


def cmd_lr(parser, args) -> int:
    _resolve_n(parser, args, args.mu, args.nu, args.lam)
    try:
        if args.lam is not None:
            c = lr_coeff(LRQuery(args.mu, args.nu, args.lam))
            fam = None
        else:
            fam = lr_family(args.mu, args.nu)
    except ValueError as exc:
        parser.error(str(exc))
    if fam is None:
        if args.fmt == "json":
            print(json.dumps({"mu": format_tuple(args.mu), "nu": format_tuple(args.nu), "lambda": format_tuple(args.lam), "coeff": c}))
        elif args.fmt == "csv":
            print(_emit_rows(["mu", "nu", "lambda", "coeff"], [[format_tuple(args.mu), format_tuple(args.nu), format_tuple(args.lam), c]]))
        else:
            print(c)
        return 0
    items = sorted(fam.items(), reverse=True)
    if args.fmt == "json":
        print(json.dumps({format_tuple(k): v for k, v in items}))
    elif args.fmt == "csv":
        print(_emit_rows(["lambda", "coeff"], [[format_tuple(k), v] for k, v in items]))
    else:
        for k, v in items:
            print(f"{format_tuple(k)}\t{v}")
    return 0


def _suite_kwargs(parser, args) -> dict:
    s, kw = args.suite, {}
    ns = (args.n,) if args.n is not None else None
    if args.lo is not None and args.hi is not None and args.lo > args.hi:
        parser.error("--lo must not exceed --hi")
    if s == "main":
        kw.update(ns=ns, max_ab=args.max_ab, max_mu1=args.max_mu1, jobs=args.jobs)
    elif s in ("birational", "rmatrix"):
        kw.update(ns=ns, samples=args.samples, seed=args.seed)
        if s == "rmatrix":
            kw.update(lo=args.lo, hi=args.hi)
    elif s in ("tropical", "pieri"):
        kw.update(ns=ns, lo=args.lo, hi=args.hi)
    elif s == "ominus":
        kw.update(ns=ns, max_ab=args.max_ab)
    elif s == "jt":
        kw.update(max_n=args.n, max_entry=args.hi)
    if ns is not None and (args.n < 2 or (s == "jt" and args.n > 6)):
        parser.error(f"--n {args.n} is out of range for suite {s}")
    return {k: v for k, v in kw.items() if v is not None}


def cmd_verify(parser, args) -> int:
    report = run_suite(args.suite, **_suite_kwargs(parser, args))
    if args.fmt == "csv":
        print(
            _emit_rows(
                ["suite", "instances", "failures", "elapsed_ms", "seed"],
                [[report["suite"], report["instances"], len(report["failures"]), report["elapsed_ms"], report["seed"]]],
            )
        )
    else:
        print(json.dumps(report, indent=2, sort_keys=True))
    return 1 if report["failures"] else 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"phi": cmd_phi, "lr": cmd_lr, "verify": cmd_verify}[args.command]
    return handler(parser, args)


if __name__ == "__main__":
    sys.exit(main())
