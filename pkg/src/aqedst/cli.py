"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .aq_graph import DEFAULT_MAX_DIM, SizeLimitError, build_aq, diameter, from_bits
from .broadcast_sim import DEFAULT_BUDGET, BudgetExceeded, exhaustive_fault_check, monte_carlo
from .edst_builder import ConstructionError, build
from .formats import SchemaError, VerificationError, export_dot, export_json, import_json
from .verifier import max_edst_upper_bound, verify_all

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _vertex(text: str, n: int) -> int:
    try:
        x = from_bits(text, n) if len(text) == n and set(text) <= {"0", "1"} else int(text)
    except ValueError:
        raise UsageError(f"bad vertex {text!r}: use an {n}-bit string or an integer") from None
    if not 0 <= x < 1 << n:
        raise UsageError(f"vertex {text!r} out of range for AQ_{n}")
    return x


def cmd_build(args) -> int:
    t0 = time.perf_counter()
    d = build(args.n, max_dim=args.max_dim)
    print(f"built {d!r} in {time.perf_counter() - t0:.2f}s (verified)", file=sys.stderr)
    _write(export_json(d), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    d = import_json(_read(args.file), verify=False, max_dim=args.max_dim)
    report = verify_all(build_aq(d.n, max_dim=args.max_dim), d)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, default=str))
    else:
        print(report.summary())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_export(args) -> int:
    if (args.n is None) == (args.input is None):
        raise UsageError("export needs exactly one of -n or --input")
    if args.graph:
        if args.format != "dot":
            raise UsageError("--graph is only available with --format dot")
        n = args.n if args.n is not None else import_json(_read(args.input), verify=False).n
        _write(export_dot(build_aq(n, max_dim=args.max_dim)), args.output)
        return EXIT_OK
    if args.input is not None:
        d = import_json(_read(args.input), verify=not args.no_verify, max_dim=args.max_dim)
    else:
        d = build(args.n, max_dim=args.max_dim)
    text = export_dot(d, include_leftover=not args.no_leftover) if args.format == "dot" else export_json(d)
    _write(text, args.output)
    return EXIT_OK


def cmd_simulate(args) -> int:
    d = build(args.n, max_dim=args.max_dim)
    if args.exhaustive:
        if args.trials is not None or args.seed is not None:
            raise UsageError("--exhaustive cannot be combined with --trials/--seed")
        res = exhaustive_fault_check(d, args.k, budget=args.budget)
        print(json.dumps(res.to_dict(), indent=2))
        return EXIT_OK if res.ok else EXIT_VERIFY
    source = _vertex(args.source, args.n) if args.source is not None else 0
    trials = args.trials if args.trials is not None else 10_000
    seed = args.seed if args.seed is not None else 0
    stats = monte_carlo(d, args.k, trials=trials, seed=seed, source=source)
    print(json.dumps(stats.to_dict(), indent=2))
    return EXIT_OK


def cmd_stats(args) -> int:
    g = build_aq(args.n, max_dim=args.max_dim)
    n = args.n
    out = {
        "n": n,
        "vertices": g.num_vertices,
        "edges": g.num_edges,
        "degree": g.degree(0),
        "hypercube_diameter": n,
    }
    if n >= 2:
        out["edst_upper_bound"] = max_edst_upper_bound(n)
    if not args.no_diameter:
        if n > args.max_diameter_dim:
            raise UsageError(f"diameter is computed up to n={args.max_diameter_dim}; "
                             "raise --max-diameter-dim or pass --no-diameter")
        out["diameter"] = diameter(g)
    print(json.dumps(out, indent=2))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="aqedst",
                                description="Edge-disjoint spanning trees in augmented cubes AQ_n.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                   help=f"largest dimension accepted (default {DEFAULT_MAX_DIM})")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct and verify the n-1 EDSTs of AQ_n, write JSON")
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="verify a decomposition JSON file ('-' for stdin)")
    v.add_argument("file")
    v.add_argument("--json", action="store_true", help="print the full report as JSON")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="export a decomposition (or the bare graph) as JSON or DOT")
    e.add_argument("--format", choices=["dot", "json"], default="json")
    e.add_argument("-n", type=int)
    e.add_argument("--input", help="decomposition JSON to read instead of building")
    e.add_argument("--graph", action="store_true", help="export AQ_n itself (DOT only)")
    e.add_argument("--no-verify", action="store_true", help="skip verification of --input")
    e.add_argument("--no-leftover", action="store_true", help="omit the leftover tree from DOT")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)

    s = sub.add_parser("simulate", help="broadcast under link failures")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-k", type=int, required=True, help="number of failed links")
    s.add_argument("--exhaustive", action="store_true", help="enumerate every k-subset and source")
    s.add_argument("--trials", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--source", help="source vertex as bit string or integer (default 0)")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="max failure sets enumerated by --exhaustive")
    s.set_defaults(func=cmd_simulate)

    st = sub.add_parser("stats", help="vertex/edge counts, degree, diameter, EDST bound")
    st.add_argument("-n", type=int, required=True)
    st.add_argument("--no-diameter", action="store_true")
    st.add_argument("--max-diameter-dim", type=int, default=14)
    st.set_defaults(func=cmd_stats)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"error: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, SchemaError, SizeLimitError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
