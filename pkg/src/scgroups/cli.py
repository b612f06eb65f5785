"""Command-line interface: ``scg <command> ...``.

Exit codes: 0 certified / success, 1 refuted, 2 undecided (budget hit or
census gap), 3 bad input.  Every option can also be set through an
environment variable named ``SCG_<OPTION>``, e.g. ``SCG_BACKTRACK_BUDGET``.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .census import DEFAULT_N_CAP, format_census, run_census
from .classify import classify
from .constructions import PreconditionError
from .families import DomainError, TranscriptionMissingError, build, dump_registry, seed_extended
from .group import EngineConfig
from .sggi import CprGraph, GraphError
from .verify import verify

ENV_PREFIX = "SCG_"
EXIT_OK, EXIT_REFUTED, EXIT_UNDECIDED, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _env(name: str, default, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError:
        raise InputError(f"environment variable {ENV_PREFIX}{name}={raw!r} is not a valid {cast.__name__}") from None


def _read_graph(path: str) -> CprGraph:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return CprGraph.loads(text)
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _write(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args) -> EngineConfig:
    return EngineConfig(enum_threshold=args.enum_threshold, backtrack_budget=args.backtrack_budget)


# -- commands --

def cmd_build(args) -> int:
    if args.family == "seed":
        if args.r is None or args.k is None:
            raise InputError("build seed needs RANK FAMILY (and --t)")
        s = seed_extended(args.r, args.k, args.t)
    else:
        if args.r is None:
            raise InputError("build needs the rank r")
        s = build(args.family, args.r, args.k or 0)
    _write(s.to_graph().dumps(), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    s = _read_graph(args.graph).to_sggi()
    rep = verify(s, config=_config(args))
    text = rep.dumps() if args.format == "structured" else rep.render_text(args.depth) + "\n"
    _write(text, args.output)
    return rep.exit_code


def cmd_classify(args) -> int:
    s = _read_graph(args.graph).to_sggi()
    print(classify(s.group))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _read_graph(args.graph)
    _write(g.to_dot(), args.output)
    return EXIT_OK


def cmd_census(args) -> int:
    if args.n_max > args.n_cap:
        raise InputError(f"--n-max {args.n_max} exceeds the cap {args.n_cap} (raise it with --n-cap)")
    result = run_census(args.n_max, n_min=args.n_min, config=_config(args), jobs=args.jobs,
                        graph_dir=args.graph_dir, time_budget=args.time_budget, n_cap=args.n_cap)
    _write(format_census(result, args.format), args.output)
    for cell in result.failures:
        print(f"census: ({cell.n}, {cell.r}) {cell.status}: {cell.note or cell.source}", file=sys.stderr)
    if not result.failures:
        return EXIT_OK
    return EXIT_REFUTED if all(c.status == "refuted" for c in result.failures) else EXIT_UNDECIDED


def cmd_registry(args) -> int:
    _write(dump_registry(), args.output)
    return EXIT_OK


# -- parser --

def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scg", description="String C-group construction and certification.")
    p.add_argument("--enum-threshold", type=int, default=_env("ENUM_THRESHOLD", 10**5, int),
                   help="intersect by enumeration when the smaller group has at most this order")
    p.add_argument("--backtrack-budget", type=int, default=_env("BACKTRACK_BUDGET", 10**8, int),
                   help="node limit for the intersection search; exceeding it gives 'undecided'")
    p.add_argument("--format", choices=["text", "structured"], default=_env("FORMAT", "text"))
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write the graph of a family member or seed")
    b.add_argument("family", help="family name (FL, R, Sh, ..., D) or 'seed'")
    b.add_argument("r", type=int, nargs="?", help="rank (for seeds: the seed rank)")
    b.add_argument("k", type=int, nargs="?", help="parameter k (for seeds: the family number)")
    b.add_argument("--t", type=int, default=2, help="tail length for seeds (default 2)")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="certify or refute the intersection property")
    v.add_argument("graph", help="graph file, or - for stdin")
    v.add_argument("--depth", type=int, default=1, help="levels of sections in the text report")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="print the recognised group type")
    c.add_argument("graph")
    c.set_defaults(func=cmd_classify)

    d = sub.add_parser("export-dot", help="graph file to Graphviz DOT")
    d.add_argument("graph")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_export_dot)

    cs = sub.add_parser("census", help="cover A_n for every rank up to n_max")
    cs.add_argument("--n-max", type=int, default=_env("N_MAX", 20, int))
    cs.add_argument("--n-min", type=int, default=_env("N_MIN", 12, int))
    cs.add_argument("--n-cap", type=int, default=_env("N_CAP", DEFAULT_N_CAP, int))
    cs.add_argument("--jobs", type=int, default=_env("JOBS", 1, int))
    cs.add_argument("--time-budget", type=float, default=_env("TIME_BUDGET", None, float),
                    help="seconds; cells not started in time are reported undecided")
    cs.add_argument("--graph-dir", default=_env("GRAPH_DIR", None),
                    help="write each verified cell's graph file here")
    cs.add_argument("-o", "--output")
    cs.set_defaults(func=cmd_census)

    rg = sub.add_parser("registry", help="dump the family table")
    rg.add_argument("-o", "--output")
    rg.set_defaults(func=cmd_registry)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
        return args.func(args)
    except (InputError, DomainError, TranscriptionMissingError, PreconditionError, GraphError) as exc:
        print(f"scg: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # argparse usage errors
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
