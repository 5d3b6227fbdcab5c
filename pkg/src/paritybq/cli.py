"""Command-line front end.

Exit status: 0 on success/PASS, 1 on a failed check or a rejected input
combination, 2 on I/O or parse errors. Results go to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .algebra import (
    AlgebraError,
    AxiomViolation,
    Biquandle,
    ConstraintViolated,
    NonUnit,
    ParityBiquandle,
    alexander_biquandle,
    alexander_parity_biquandle,
    as_parity,
    format_algebra,
    parse_algebra,
    parse_header,
    verify_biquandle_axioms,
    verify_parity_axioms,
)
from .cocycle import (
    CocycleError,
    compatibility_report,
    format_cocycle,
    invariant_polynomial,
    parse_cocycle,
    polynomial_to_string,
    strong_invariant_polynomial,
)
from .coloring import counting_invariant
from .gauss import GaussCodeError, KnotTable, bundled_knot_table, load_knot_table
from .search import COMPATIBLE, STRONG, cocycle_solutions, pair_from_vector


class UsageFailure(Exception):
    """Inputs parse but cannot be combined (exit status 1)."""


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _raw_tables(text: str):
    """Header kind plus unverified 0-indexed tables, so failures can be reported."""
    from .algebra import read_int_rows

    header, body = parse_header(text)
    kind = header[0]
    if kind not in ("biquandle", "parity-biquandle") or len(header) != 2:
        raise AlgebraError(f"unrecognised header {' '.join(header)!r}")
    n = int(header[1])
    count = n if kind == "biquandle" else 2 * n
    rows = read_int_rows(body, count, 2 * n, kind)
    for i, row in enumerate(rows, 1):
        if any(not 1 <= v <= n for v in row):
            raise AlgebraError(f"{kind}: row {i} has entries outside 1..{n}")
    split = [([v - 1 for v in r[:n]], [v - 1 for v in r[n:]]) for r in rows]
    under = [s[0] for s in split]
    over = [s[1] for s in split]
    return kind, n, under, over


def cmd_check(args) -> int:
    paths = [args.path] + ([args.algebra] if args.algebra else [])
    texts = [_read(p) for p in paths]
    header, _ = parse_header(texts[0])
    if header[0] == "cocycle":
        if args.algebra is None:
            raise UsageFailure("checking a cocycle needs --algebra")
        pair = parse_cocycle(texts[0])
        X = parse_algebra(texts[1])
        report = compatibility_report(pair, X, strong=True)
    else:
        kind, n, under, over = _raw_tables(texts[0])
        if kind == "biquandle":
            report = verify_biquandle_axioms(under, over)
        else:
            report = verify_parity_axioms(under[:n], under[n:], over[:n], over[n:])
    if args.verbose:
        print(report)
    bad = report.first_failure()
    if bad is None:
        print("PASS")
        return 0
    print(f"FAIL {bad.name} witness={bad.witness} {bad.detail}".rstrip())
    return 1


def _load_knots(path: str | None) -> KnotTable:
    return bundled_knot_table() if path is None else load_knot_table(path)


def _invariant_line(job):
    name, d, X, pair, mode = job
    if mode == "count":
        value = str(counting_invariant(d, X))
    elif mode == "count-nonparity":
        value = str(counting_invariant(d, X, parity=False))
    elif mode == "strong":
        value = polynomial_to_string(strong_invariant_polynomial(d, X, pair))
    else:
        value = polynomial_to_string(invariant_polynomial(d, X, pair, parity=(mode == "weak")))
    return f"{name}\t{value}"


def cmd_invariant(args) -> int:
    X = as_parity(parse_algebra(_read(args.algebra)))
    pair = None
    if args.count_only:
        mode = "count-nonparity" if args.non_parity else "count"
    else:
        if args.cocycle is None:
            raise UsageFailure("a cocycle file is required unless --count-only is given")
        pair = parse_cocycle(_read(args.cocycle))
        if pair.n != X.n:
            raise UsageFailure(f"IncompatibleSizes: cocycle is {pair.n}x{pair.n}, algebra has {X.n} elements")
        if args.strong and args.non_parity:
            raise UsageFailure("--strong and --non-parity cannot be combined")
        mode = "strong" if args.strong else ("nonparity" if args.non_parity else "weak")
        pair = pair.verified(X)
        if mode == "strong" and pair.tier < STRONG:
            raise UsageFailure("NotStrong: the cocycle pair is not strongly compatible")
        if mode == "weak" and pair.tier < COMPATIBLE:
            raise UsageFailure("NotCompatible: the cocycle pair is not compatible")
    jobs = [(name, d, X, pair, mode) for name, d in _load_knots(args.knots)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            lines = list(pool.map(_invariant_line, jobs))
    else:
        lines = [_invariant_line(j) for j in jobs]
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0


def cmd_search(args) -> int:
    X = as_parity(parse_algebra(_read(args.algebra)))
    strength = STRONG if args.strong else COMPATIBLE
    space = cocycle_solutions(X, args.mod, strength)
    print(f"count {space.count}")
    emitted = 0
    for vec in space:
        if emitted >= args.cap:
            break
        pair = pair_from_vector(vec, X.n, args.mod)
        report = compatibility_report(pair, X, strong=args.strong)
        if not report.ok:  # the solver and verifier are independent; never emit unverified output
            raise RuntimeError(f"solver produced an unverified pair: {report.first_failure()}")
        print("---")
        sys.stdout.write(format_cocycle(pair))
        emitted += 1
    return 0


def cmd_alexander(args) -> int:
    if (args.b is None) != (args.a is None):
        raise UsageFailure("-b and -a must be given together")
    if args.b is None:
        algebra: Biquandle | ParityBiquandle = alexander_biquandle(args.mod, args.t, args.s)
    else:
        algebra = alexander_parity_biquandle(args.mod, args.t, args.s, args.b, args.a)
    sys.stdout.write(format_algebra(algebra))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paritybq",
        description="Parity biquandle counting and cocycle invariants of virtual knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify an algebra file, or a cocycle file against --algebra")
    p.add_argument("path")
    p.add_argument("--algebra", help="algebra file (required when PATH is a cocycle)")
    p.add_argument("-v", "--verbose", action="store_true", help="print every check")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("invariant", help="compute invariants over a knot table")
    p.add_argument("algebra")
    p.add_argument("cocycle", nargs="?")
    p.add_argument("--knots", help="knot table file (default: the bundled table)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strong", action="store_true", help="two-variable invariant")
    mode.add_argument("--weak", action="store_true", help="one-variable invariant (default)")
    mode.add_argument("--count-only", action="store_true", help="counting invariant only")
    p.add_argument("--non-parity", action="store_true", help="treat every crossing as even")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("search", help="enumerate compatible cocycle pairs over Z_m")
    p.add_argument("algebra")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--strong", action="store_true")
    p.add_argument("--cap", type=int, default=100)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("alexander", help="emit an Alexander (parity) biquandle file")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-b", type=int)
    p.add_argument("-a", type=int)
    p.set_defaults(func=cmd_alexander)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AxiomViolation, NonUnit, ConstraintViolated, UsageFailure, CocycleError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (AlgebraError, GaussCodeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
