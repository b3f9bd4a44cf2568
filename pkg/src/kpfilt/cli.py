"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .exterior import character, kp_module
from .filtration import build_filtration, check_main_proposition
from .permutation import Permutation, in_S_paren
from .pieri import sorted_chains, verify_pieri
from .schubert import schubert
from .suite import run_suite


def permutation_arg(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


def positive(text: str) -> int:
    value = nonnegative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpfilt",
        description="Schubert polynomials, Pieri chains and explicit KP filtrations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, degree=False, kind=False, n=True):
        p.add_argument("perm", type=permutation_arg, help="one-line notation, e.g. 2,1,3")
        if n:
            p.add_argument("--n", type=positive, help="rank of b_n (default: window size of w)")
        if degree:
            p.add_argument("--i", type=positive, required=True)
            p.add_argument("--d", type=nonnegative, required=True)
        if kind:
            p.add_argument("--kind", choices=["X", "Y"], default="X")
        p.add_argument("--json", action="store_true")
        return p

    common(sub.add_parser("schubert", help="print the Schubert polynomial"), n=False)
    common(sub.add_parser("pieri", help="X chains and the Pieri identity"), degree=True, n=False)
    common(sub.add_parser("dual-pieri", help="Y chains and the dual Pieri identity"), degree=True, n=False)
    common(sub.add_parser("kp-char", help="dimension and character of S_w"))
    common(sub.add_parser("filtration", help="build and check the KP filtration"), degree=True, kind=True)
    common(sub.add_parser("prop-check", help="triangularity matrix of phi(v)"), degree=True, kind=True)

    suite = sub.add_parser("verify-suite", help="run all range and structural checks")
    suite.add_argument("--max-sn", type=positive, default=4)
    suite.add_argument("--seed", type=int, default=0)
    suite.add_argument("--json", action="store_true")
    return parser


def _resolve_n(parser, args) -> int:
    w = args.perm
    n = args.n if args.n is not None else max(w.size, 1)
    if not in_S_paren(w, n):
        parser.error(f"{w} is not in S^({n})")
    if getattr(args, "i", None) is not None and args.i > n:
        parser.error(f"i > n ({args.i} > {n})")
    return n


def _cmd_schubert(args) -> int:
    poly = schubert(args.perm)
    print(dump({"w": list(args.perm.images), "polynomial": poly.to_json()}) if args.json else poly)
    return 0


def _cmd_pieri(args, kind: str) -> int:
    w, i, d = args.perm, args.i, args.d
    chains = sorted_chains(w, i, d, kind)
    check = verify_pieri(w, i, d, kind)
    if args.json:
        print(dump({"kind": kind, "w": list(w.images), "i": i, "d": d,
                    "chains": [c.to_json() for c in chains], "identity": check.ok}))
    else:
        factor = "h" if kind == "X" else "e"
        for c in chains:
            steps = " ".join(f"t({p},{q})" for p, q in c.steps) or "id"
            print(f"{steps} -> {c.end}")
        print(f"S_w * {factor}_{d}(x1..x{i}) = sum over {len(chains)} chains: {'ok' if check.ok else 'FAILED'}")
    return 0 if check.ok else 1


def _cmd_kp_char(args, n: int) -> int:
    span = kp_module(args.perm, n)
    ch = character(span, n)
    ok = ch == schubert(args.perm)
    if args.json:
        print(dump({"generator": list(args.perm.images), "n": n, "dimension": span.dimension,
                    "character": ch.to_json()}))
    else:
        print(f"dimension: {span.dimension}")
        print(f"character: {ch}")
    return 0 if ok else 1


def _cmd_filtration(args, n: int) -> int:
    report = build_filtration(args.perm, args.i, args.d, args.kind, n)
    if args.json:
        print(dump(report.to_json()))
    else:
        for j, (c, q) in enumerate(zip(report.chains, report.quotients), start=1):
            print(f"zeta_{j}: {c.steps} end {c.end}  quotient dim {q.dim}  ch {q.character}")
        print(f"ladder: {report.ladder}")
        print(f"triangular: {report.triangular}")
        print(f"verdict: {report.verdict}")
    return 0 if report.ok else 1


def _cmd_prop_check(args, n: int) -> int:
    report = check_main_proposition(args.perm, args.i, args.d, args.kind, n)
    data = report.to_json()
    if args.json:
        print(dump(data))
    else:
        for c, row in zip(report.chains, data["matrix"]):
            print(f"{str(c.end):>16}  " + " ".join("*" if v else "." for v in row))
        print(f"diagonal constants: {data['diagonal_constants']}")
        print(f"verdict: {data['verdict']}")
    return 0 if report.triangular else 1


def _cmd_suite(args) -> int:
    results = run_suite(args.max_sn, args.seed)
    ok = all(r.ok for r in results)
    if args.json:
        print(dump({"max_sn": args.max_sn, "seed": args.seed, "ok": ok,
                    "tasks": [r.to_json() for r in results]}))
    else:
        width = max(len(r.key) for r in results)
        for r in results:
            print(f"{r.key:<{width}}  {'PASS' if r.ok else 'FAIL'}  {r.cases:>6} cases  {r.seconds:6.2f}s")
            for f in r.failures[:3]:
                print(f"{'':<{width}}    {f}")
        print("all passed" if ok else "FAILURES")
    return 0 if ok else 1


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "schubert":
            return _cmd_schubert(args)
        if args.command in ("pieri", "dual-pieri"):
            return _cmd_pieri(args, "X" if args.command == "pieri" else "Y")
        if args.command == "verify-suite":
            return _cmd_suite(args)
        n = _resolve_n(parser, args)
        if args.command == "kp-char":
            return _cmd_kp_char(args, n)
        if args.command == "filtration":
            return _cmd_filtration(args, n)
        return _cmd_prop_check(args, n)
    except SystemExit as exc:
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
