"""Command-line interface: ``unigf {poly,triangle,enumerate,verify,oeis-check}``.

Exit status: 0 success, 1 a requested check failed or disagreed,
2 usage error, 3 input file error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import enumeration as en
from . import specialize as sp
from .unified import u_poly_main
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, command: str, params: dict, text: str, payload) -> None:
    if args.format == "structured":
        env = {"command": command, "parameters": params, "result": payload}
        sys.stdout.write(json.dumps(env, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text + ("\n" if text and not text.endswith("\n") else ""))


def _bindings(args) -> dict:
    try:
        return sp.parse_bindings(args.bind or "")
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --bind: {exc}") from None


def _str_bindings(b: dict) -> dict:
    return {k: str(v) for k, v in sorted(b.items())}


def cmd_poly(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1 (U_0 is not a polynomial)")
    b = _bindings(args)
    p = u_poly_main(args.n).substitute(b)
    _emit(args, "poly", {"n": args.n, "bind": _str_bindings(b)},
          p.to_text(), {"text": p.to_text(), "terms": p.to_records()})
    return EXIT_OK


def cmd_triangle(args) -> int:
    if args.n_max < 1:
        raise UsageError("n_max must be >= 1")
    extra = _bindings(args)
    if args.case == "-":
        case = None
    else:
        try:
            case = sp.get_case(int(args.case))
        except (KeyError, ValueError):
            raise UsageError(f"unknown case {args.case!r}; valid ids are 1..13") from None
    try:
        tri = sp.specialize_triangle(case, args.n_max, extra, allow_rational=args.allow_rational)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [[str(v) for v in r] for r in tri.rows]
    text = "\n".join(" ".join(r) for r in rows)
    params = {"case": None if case is None else case.id, "n_max": args.n_max,
              "bind": _str_bindings(extra)}
    _emit(args, "triangle", params, text, {"rows": rows})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    n, k = args.n, args.k
    if n < 1 or k < 1:
        raise UsageError("n and k must be positive")
    if n > en.DEFAULT_MAX_N and not args.force:
        raise UsageError(f"n = {n} exceeds the enumeration guard {en.DEFAULT_MAX_N}; use --force")
    if k > n:
        print(f"warning: k = {k} > n = {n}; no partitions", file=sys.stderr)
    lines = []
    records = []
    for p in en.enumerate_llp(n, k):
        s = p.format()
        rec = {"partition": s}
        if args.stats:
            st = en.stats(p)
            s += f" rlb={st.rlb} nsb={st.nsb} rle={st.rle} nse={st.nse}"
            rec.update(st._asdict())
        lines.append(s)
        records.append(rec)
    _emit(args, "enumerate", {"n": n, "k": k, "stats": bool(args.stats)},
          "\n".join(lines), {"count": len(records), "partitions": records})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 1:
        raise UsageError("n_max must be >= 1")
    suites = args.suites or ["all"]
    for s in suites:
        if s != "all" and s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from all, {', '.join(SUITES)}")
    results = run_suites(args.n_max, suites, mutate=args.mutate, force=args.force)
    ok = all(r.passed for r in results)
    text = "\n".join(r.line() for r in results)
    text += f"\n{'ALL PASS' if ok else 'FAILED'}: {sum(r.passed for r in results)}/{len(results)}"
    _emit(args, "verify", {"n_max": args.n_max, "suites": suites, "mutate": args.mutate},
          text, {"passed": ok, "checks": [
              {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oeis_check(args) -> int:
    try:
        case = sp.get_case(int(args.case))
    except (KeyError, ValueError):
        raise UsageError(f"unknown case {args.case!r}; valid ids are 1..13") from None
    try:
        seq = sp.read_bfile(args.bfile)
    except OSError as exc:
        print(f"error: cannot read {args.bfile}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except sp.BFileError as exc:
        print(f"error: {args.bfile}: {exc}", file=sys.stderr)
        return EXIT_IO
    tri = sp.specialize_triangle(case, args.n_max)
    if args.mode == "auto":
        rep = sp.compare_any_mode(tri, seq, case.id)
    else:
        rep = sp.compare_with_sequence(tri, seq, args.mode, case.id)
    params = {"case": case.id, "bfile": str(args.bfile), "n_max": args.n_max, "mode": args.mode}
    _emit(args, "oeis-check", params, rep.to_text(), rep.to_record())
    return EXIT_OK if rep.agree else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="unigf", description=(
        "Exact computation of the unified set-partition polynomials U_n(x; a, b, l, m)."))
    ap.add_argument("--timing", action="store_true", help="report elapsed time on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("poly", help="print U_n, optionally with symbols bound")
    p.add_argument("n", type=int)
    p.add_argument("--bind", help="e.g. b=1,m=1 or a=1/2")
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("triangle", help="integer coefficient triangle of a specialisation case")
    p.add_argument("case", help="case id 1..13, or '-' to use --bind only")
    p.add_argument("n_max", type=int)
    p.add_argument("--bind", help="bind or override symbols, e.g. a=2,l=1")
    p.add_argument("--allow-rational", action="store_true",
                   help="permit non-integer entries (exploratory bindings)")
    common(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("enumerate", help="list-of-lists partitions of [n] into k blocks")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--stats", action="store_true", help="append rlb, nsb, rle, nse")
    p.add_argument("--force", action="store_true", help=f"allow n > {en.DEFAULT_MAX_N}")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("n_max", type=int)
    p.add_argument("suites", nargs="*", help=f"all (default) or any of: {', '.join(SUITES)}")
    p.add_argument("--mutate", action="store_true", help="inject a known fault; checks must fail")
    p.add_argument("--force", action="store_true", help="lift the enumeration guard")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis-check", help="compare a case triangle with a local b-file")
    p.add_argument("case")
    p.add_argument("bfile")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--mode", choices=("auto",) + sp.MODES, default="auto",
                   help="auto tries triangle-by-rows then row-sums")
    common(p)
    p.set_defaults(func=cmd_oeis_check)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    if args.timing:
        print(f"elapsed {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
