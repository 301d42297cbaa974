"""Command line front end: ``copthrottle compute|family|verify|classify|trace``.

Exit codes: 0 success, 1 a verification row failed, 2 usage or input error,
3 the state budget was exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import _accel, bounds, pursuit
from .burning import burning_number
from .classification import classify_low_throttle
from .families import FamilySpecError, build_family
from .graph import (
    Graph,
    Graph6Error,
    dismantling_order,
    domination_number,
    encode_graph6,
    format_edge_list,
    girth,
    is_tree,
    k_center,
    mask_of,
    parse_edge_list,
    parse_graph6,
    shortest_cycle,
)
from .pursuit import BudgetExceeded, capture_time_of_set, cop_number, cop_throttle, game_trace, k_capture_time
from .tree_throttling import tree_cop_throttle
from .zero_forcing import forcing_number, propagation_time, throttle

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

INVARIANTS = ("thc", "thplus", "th", "copnumber", "captk", "captset", "z", "zplus",
              "gamma", "girth", "radk", "burn", "copwin")


class UsageError(Exception):
    pass


def _plain(x):
    """Make ``x`` JSON-safe, writing infinity as the string "inf"."""
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "item"):  # numpy scalars
        return x.item()
    return x


def _emit(payload: dict, table: bool, out=None) -> None:
    out = out or sys.stdout
    payload = _plain(payload)
    if table:
        width = max(len(k) for k in payload) if payload else 0
        for k, v in payload.items():
            out.write(f"{k.ljust(width)}  {json.dumps(v) if isinstance(v, (dict, list)) else v}\n")
    else:
        out.write(json.dumps(payload) + "\n")


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected a comma separated vertex list, got {text!r}") from None


# ---------------------------------------------------------------- graph input

def _graph_from_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise UsageError("no graph given")
    # a graph6 line has no blanks and is never a bare vertex count
    if len(lines[0].split()) == 1 and not lines[0].isdigit():
        if len(lines) > 1:
            raise UsageError("expected a single graph6 line")
        return parse_graph6(lines[0])
    return parse_edge_list("\n".join(lines))


def load_graph(args) -> Graph:
    sources = [s for s in (args.graph6, args.file, args.family) if s is not None]
    if len(sources) > 1:
        raise UsageError("give at most one of --graph6, --file, --family")
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.file is not None:
        try:
            return _graph_from_text(Path(args.file).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    if args.family is not None:
        return build_family(args.family)
    return _graph_from_text(sys.stdin.read())


# ---------------------------------------------------------------- subcommands

def _compute(args) -> int:
    g = load_graph(args)
    inv = args.invariant
    out: dict = {"invariant": inv, "graph6": encode_graph6(g), "n": g.n}
    if inv == "thc":
        res = tree_cop_throttle(g) if is_tree(g) else cop_throttle(g)
        out.update(thc=res.value, k=res.k, witness=list(res.witness),
                   capt={str(k): v for k, v in sorted(res.capt.items())})
        if not is_tree(g):
            out["pruned_lower_bounds"] = {str(k): v for k, v in sorted(res.pruned.items())}
        else:
            out["method"] = "min_k (k + rad_k) for trees"
    elif inv in ("thplus", "th"):
        res = throttle(g, "psd" if inv == "thplus" else "standard")
        out.update({inv: res.value, "witness": list(res.witness), "propagation_time": res.propagation_time})
    elif inv == "copnumber":
        c = cop_number(g)
        out.update(copnumber=c, witness=list(k_capture_time(g, c)[1]))
    elif inv == "captk":
        if args.k is None:
            raise UsageError("captk needs --k")
        value, config = k_capture_time(g, args.k)
        out.update(captk=value, k=args.k, witness=list(config))
    elif inv == "captset":
        if args.cops is None:
            raise UsageError("captset needs --cops")
        cops = _vertex_list(args.cops)
        if not cops or any(not 0 <= v < g.n for v in cops):
            raise UsageError(f"cop positions must be vertices 0..{g.n - 1}")
        out.update(captset=capture_time_of_set(g, cops), cops=sorted(cops))
    elif inv in ("z", "zplus"):
        value, witness = forcing_number(g, "psd" if inv == "zplus" else "standard")
        out.update({inv: value, "witness": list(witness)})
    elif inv == "gamma":
        value, witness = domination_number(g)
        out.update(gamma=value, witness=list(witness))
    elif inv == "girth":
        out.update(girth=girth(g), cycle=shortest_cycle(g))
    elif inv == "radk":
        if args.k is None:
            raise UsageError("radk needs --k")
        if not 1 <= args.k <= g.n:
            raise UsageError(f"--k must lie in 1..{g.n}")
        value, witness = k_center(g, args.k)
        out.update(radk=value, k=args.k, witness=list(witness) if witness else None)
    elif inv == "burn":
        value, seq = burning_number(g)
        out.update(burn=value, sequence=seq)
    elif inv == "copwin":
        order = dismantling_order(g)
        out.update(copwin=order is not None, dismantling_order=order)
    _emit(out, args.table)
    return EXIT_OK


def _family(args) -> int:
    g = build_family(args.spec)
    if args.emit == "graph6":
        print(encode_graph6(g))
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _verify(args) -> int:
    rep = bounds.Report()
    if args.suite in ("formulas", "all"):
        rep.extend(bounds.verify_all_formulas())
    if args.suite in ("inequalities", "all"):
        corpus = bounds.desk_families() + bounds.random_corpus(args.count, args.seed)
        rep.extend(bounds.verify_inequalities(corpus, args.seed))
        rep.extend(bounds.girth_projection_check(seed=args.seed))
    if args.table:
        print(rep.to_table())
    else:
        print(rep.to_json())
    return EXIT_OK if rep.ok else EXIT_FAILED


def _classify(args) -> int:
    g = load_graph(args)
    res = classify_low_throttle(g, proper=args.proper)
    _emit({"graph6": encode_graph6(g), **res.as_dict()}, args.table)
    return EXIT_OK


def _trace(args) -> int:
    g = load_graph(args)
    if args.kind == "forcing":
        s = _vertex_list(args.set) if args.set else list(throttle(g, args.rule).witness)
        pt, record = propagation_time(g, mask_of(s), args.rule)
        payload = {"graph6": encode_graph6(g), **record.to_json()}
    else:
        cops = _vertex_list(args.cops) if args.cops else list(cop_throttle(g).witness)
        payload = {"graph6": encode_graph6(g), **game_trace(g, cops, args.robber)}
    Path(args.out).write_text(json.dumps(_plain(payload), indent=2) + "\n")
    _emit({"written": args.out, "kind": args.kind}, args.table)
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", action="store_true", help="aligned text instead of JSON")
    common.add_argument("--threads", type=int, help="numba worker threads")
    common.add_argument("--budget", type=float, help="game state budget (default from COPTHROTTLE_BUDGET or 5e7)")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--graph6", help="graph in graph6 format")
    graph_in.add_argument("--file", help="file holding a graph6 line or an edge list")
    graph_in.add_argument("--family", nargs="+", metavar="SPEC", help="family spec, e.g. stellated_wheel m=10")

    p = argparse.ArgumentParser(prog="copthrottle", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common, graph_in], help="compute one invariant")
    c.add_argument("invariant", choices=INVARIANTS)
    c.add_argument("--k", type=int)
    c.add_argument("--cops", help="cop positions for captset, e.g. 0,3")
    c.set_defaults(func=_compute)

    f = sub.add_parser("family", parents=[common], help="emit a member of a named family")
    f.add_argument("spec", nargs="+", help="family name then key=value parameters")
    f.add_argument("--emit", choices=("graph6", "edges"), default="graph6")
    f.set_defaults(func=_family)

    v = sub.add_parser("verify", parents=[common], help="replay formulas and inequalities")
    v.add_argument("suite", choices=("formulas", "inequalities", "all"))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=200, help="random graphs in the inequality corpus")
    v.set_defaults(func=_verify)

    k = sub.add_parser("classify", parents=[common, graph_in], help="decide th_c in {1,2,3,4,>=5}")
    k.add_argument("--proper", action="store_true", help="use proper containment in the z-vertex test")
    k.set_defaults(func=_classify)

    t = sub.add_parser("trace", parents=[common, graph_in], help="export a forcing chronology or a game line")
    t.add_argument("kind", choices=("forcing", "game"))
    t.add_argument("--out", required=True)
    t.add_argument("--set", help="initial blue set for forcing (default: a throttling witness)")
    t.add_argument("--rule", choices=("psd", "standard"), default="psd")
    t.add_argument("--cops", help="cop placement for game (default: a throttling witness)")
    t.add_argument("--robber", type=int, help="robber start for game (default: worst case)")
    t.set_defaults(func=_trace)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors with status 2
        return int(exc.code or 0)
    if args.threads:
        _accel.set_threads(args.threads)
    if args.budget is not None:
        pursuit.set_budget(int(args.budget))
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except Graph6Error as exc:
        print(f"error: malformed graph6: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, FamilySpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
