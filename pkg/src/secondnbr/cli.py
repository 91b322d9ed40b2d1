"""Command-line front end.

Exit codes: 0 completed, 1 at least one violation record, 2 usage error
(bad flags, malformed input files, limit violations).
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

from . import __version__
from .constructions import (VertexOrdering, blow_up, find_good_ordering, find_halfback_ordering,
                            lift_seymour, orient_without_seymour, peel, seymour_vertices_of_core)
from .gnp import (SamplerConfig, SuiteConfig, parse_suite_config, random_orientation,
                  run_claim_suite, sample_gnp)
from .graph import (Digraph, Graph, directed_edge_count, directed_two_path_count,
                    is_seymour_vertex, min_out_degree, seymour_vertices, strongly_connected,
                    sullivan_vertices)
from .io import FormatError, format_digraph, format_graph, read_digraph, read_graph
from .reports import Report
from .search import SearchConfig, adversarial_search, enumerate_orientations


class UsageError(Exception):
    pass


def _sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _need(args, name):
    if getattr(args, name) is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")
    return getattr(args, name)


def _load_graph(args, echo) -> Graph:
    """``--graph`` file, or a G(n,p) sample from ``--n --p --seed``."""
    if args.graph is not None:
        echo["graph"] = str(args.graph)
        echo["graph_sha256"] = _sha256(args.graph)
        return read_graph(args.graph)
    n, p, seed = _need(args, "n"), _need(args, "p"), _need(args, "seed")
    echo.update(n=n, p=p, seed=seed)
    return sample_gnp(SamplerConfig(n, p, seed))


def _load_digraph(args, echo) -> Digraph:
    path = _need(args, "digraph")
    echo["digraph"] = str(path)
    echo["digraph_sha256"] = _sha256(path)
    return read_digraph(path)


def _emit_artifact(args, text: str, report: Report, key: str):
    if args.out is not None:
        Path(args.out).write_text(text, encoding="ascii")
        report.params["out"] = str(args.out)
    else:
        report.aggregate[key] = text


def _predicates(args) -> list[str]:
    return ["seymour", "sullivan"] if args.predicate == "both" else [args.predicate]


# -- subcommands ---------------------------------------------------------------

def cmd_gen(args, report):
    G = _load_graph(args, report.params)
    report.add(n=G.n, m=G.m)
    _emit_artifact(args, format_graph(G), report, "graph")


def cmd_orient_random(args, report):
    G = _load_graph(args, report.params)
    seed = _need(args, "seed")
    report.params["seed"] = seed
    D = random_orientation(G, seed)
    report.add(n=D.n, m=D.m)
    _emit_artifact(args, format_digraph(D), report, "digraph")


def cmd_check(args, report):
    D = _load_digraph(args, report.params)
    report.params["predicate"] = args.predicate
    for pred in _predicates(args):
        found = seymour_vertices(D) if pred == "seymour" else sullivan_vertices(D)
        report.add(violation=not found and D.n > 0, predicate=pred,
                   vertices=found.tolist(), count=len(found))


def _search_config(args, report) -> SearchConfig:
    cfg = SearchConfig(edge_limit=args.edge_limit, prune=not args.no_prune, force=args.force,
                       threads=args.threads, node_budget=args.budget or 0)
    report.params.update(edge_limit=cfg.edge_limit, prune=cfg.prune, force=cfg.force,
                         node_budget=cfg.node_budget)
    return cfg


def cmd_enumerate(args, report):
    G = _load_graph(args, report.params)
    cfg = _search_config(args, report)
    report.params["predicate"] = args.predicate
    if G.m > cfg.edge_limit and not (cfg.force and cfg.prune):
        raise UsageError(f"graph has {G.m} edges, above --edge-limit {cfg.edge_limit}")
    for pred in _predicates(args):
        out = enumerate_orientations(G, pred, cfg)
        report.add(violation=out.verdict == "counterexample-found", predicate=pred,
                   verdict=out.verdict, nodes=out.nodes, leaves=out.leaves, pruned=out.pruned,
                   witness=format_digraph(out.witness) if out.witness is not None else None)


def cmd_adversarial(args, report):
    G = _load_graph(args, report.params)
    budget = args.budget if args.budget is not None else 1000
    seed = args.seed if args.seed is not None else 0
    report.params.update(budget=budget, seed=seed, predicate=args.predicate)
    for pred in _predicates(args):
        D, count = adversarial_search(G, pred, budget, seed)
        report.add(violation=count == 0 and G.n > 0, predicate=pred, count=count,
                   digraph=format_digraph(D))


def cmd_blowup(args, report):
    D0 = _load_digraph(args, report.params)
    copies = _need(args, "copies")
    report.params["copies"] = copies
    D = blow_up(D0, copies)
    d0, _ = min_out_degree(D0)
    dplus, _ = min_out_degree(D)
    base = [is_seymour_vertex(D0, v) for v in range(D0.n)]
    preserved = all(is_seymour_vertex(D, v) == base[v % D0.n] for v in range(D.n))
    sc = strongly_connected(D)
    report.add(violation=not (preserved and sc and dplus == d0 + D0.n), n=D.n, m=D.m,
               delta_plus=dplus, expected_delta_plus=d0 + D0.n, strongly_connected=sc,
               seymour_preserved=preserved, seymour=seymour_vertices(D).tolist())
    _emit_artifact(args, format_digraph(D), report, "digraph")


def _pattern(args, report) -> Graph:
    if args.pattern is None:
        report.params["pattern"] = None
        return Graph.empty(1)
    report.params["pattern"] = str(args.pattern)
    report.params["pattern_sha256"] = _sha256(args.pattern)
    return read_graph(args.pattern)


def cmd_good_order(args, report):
    G = _load_graph(args, report.params)
    H = _pattern(args, report)
    report.params.update(backtracks=args.backtracks, exhaustive=args.exhaustive)
    o = find_good_ordering(G, H, args.backtracks, args.exhaustive)
    report.add(found=o is not None, ordering=o.format() if o else None,
               back_degrees=list(o.back_degrees) if o else None)
    if o is not None:
        _emit_artifact(args, o.format() + "\n", report, "ordering")


def cmd_orient_noseymour(args, report):
    G = _load_graph(args, report.params)
    D = _load_digraph(args, report.params)
    report.params.update(backtracks=args.backtracks, exhaustive=args.exhaustive)
    if args.ordering is not None:
        report.params["ordering"] = str(args.ordering)
        o = VertexOrdering.parse(G, Path(args.ordering).read_text(encoding="ascii").strip())
    else:
        o = find_good_ordering(G, D.underlying(), args.backtracks, args.exhaustive)
    if o is None:
        report.add(found=False)
        return
    R = orient_without_seymour(G, o, D)
    expected = sorted(o.order[v] for v in seymour_vertices(D))
    got = seymour_vertices(R).tolist()
    report.add(violation=got != expected, found=True, ordering=o.format(),
               seymour=got, expected=expected)
    _emit_artifact(args, format_digraph(R), report, "digraph")


def cmd_peel(args, report):
    D = _load_digraph(args, report.params)
    state = peel(D)
    bad = False
    prev_x = None
    for i, step in enumerate(state.steps, 1):
        leak = directed_edge_count(D, step.A, step.B)
        shrink_ok = prev_x is None or len(step.X) < prev_x
        prev_x = len(step.X)
        bad |= leak != 0 or not shrink_ok
        report.add(violation=leak != 0 or not shrink_ok, step=i, A=len(step.A), X=len(step.X),
                   B=len(step.B), arcs_A_to_B=leak,
                   violator=step.violator.tolist() if step.violator is not None else None)
    core = seymour_vertices_of_core(D, state)
    lifts = {z: lift_seymour(D, state, z) for z in core}
    disagree = [z for z, ok in lifts.items() if ok != is_seymour_vertex(D, z)]
    report.aggregate.update(origin=state.origin, t=state.t, stop=state.stop,
                            strongly_connected=state.strongly_connected,
                            delta_plus=min_out_degree(D)[0], core_seymour=core,
                            trace=state.trace_lines())
    report.add(violation=bool(disagree), lifted=[z for z, ok in lifts.items() if ok],
               lift_disagreements=disagree, core_has_seymour=bool(core))


def cmd_halfback(args, report):
    G = _load_graph(args, report.params)
    report.params.update(backtracks=args.backtracks, exhaustive=args.exhaustive)
    o = find_halfback_ordering(G, args.backtracks, args.exhaustive)
    report.add(found=o is not None, ordering=o.format() if o else None,
               certified_none=o is None and args.exhaustive)


def cmd_claims(args, report):
    if args.config is not None:
        cfg = parse_suite_config(Path(args.config).read_text(encoding="utf-8"), str(args.config))
        report.params["config"] = str(args.config)
    else:
        cfg = SuiteConfig(n=_need(args, "n"), p=_need(args, "p"), seed=_need(args, "seed"))
    for key, attr in (("n", "n"), ("p", "p"), ("seed", "seed"), ("trials", "trials"),
                      ("epsilon", "epsilon"), ("c_small", "c_small")):
        if getattr(args, key) is not None:
            setattr(cfg, attr, getattr(args, key))
    cfg = SuiteConfig(**{k: getattr(cfg, k) for k in cfg.__dataclass_fields__})
    report.params.update(cfg.echo())
    passes = fails = 0
    for rec in run_claim_suite(cfg):
        passes += rec["pass"]
        fails += not rec["pass"]
        witness = rec.pop("witness")
        report.add(violation=not rec["pass"], witness=_jsonable(witness), **rec)
    report.aggregate.update(passes=passes, failures=fails)


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    return x


def cmd_twopaths(args, report):
    if args.digraph is not None:
        digraphs = [_load_digraph(args, report.params)]
    else:
        trials = args.trials if args.trials is not None else 1
        seed = _need(args, "seed")
        G0 = _load_graph(args, report.params)
        report.params.update(trials=trials, seed=seed)
        digraphs = []
        for t in range(trials):
            # a --graph input is reused; sampled graphs are redrawn per trial
            G = sample_gnp(SamplerConfig(G0.n, args.p, seed, t)) if t and args.graph is None else G0
            digraphs.append(random_orientation(G, seed, t))
    for i, D in enumerate(digraphs):
        mid = directed_two_path_count(D, "by-middle")
        ends = directed_two_path_count(D, "by-endpoints")
        report.add(violation=mid != ends, trial=i, by_middle=mid, by_endpoints=ends)


COMMANDS = {
    "gen": (cmd_gen, "sample G(n,p) and write a graph file"),
    "orient-random": (cmd_orient_random, "uniformly random orientation of a graph"),
    "check": (cmd_check, "list Seymour/Sullivan vertices of a digraph"),
    "enumerate": (cmd_enumerate, "exhaustive orientation verdict"),
    "adversarial": (cmd_adversarial, "local search for orientations with few qualifying vertices"),
    "blowup": (cmd_blowup, "blow up a directed cycle by copies of a digraph"),
    "good-order": (cmd_good_order, "search for an ordering with an induced prefix and half-back degrees"),
    "orient-noseymour": (cmd_orient_noseymour, "orientation copying a digraph on a good-ordering prefix"),
    "peel": (cmd_peel, "run the violator-set peeling process and lift checks"),
    "halfback": (cmd_halfback, "search for an ordering with back-degree >= i/2"),
    "claims": (cmd_claims, "run a G(n,p) claim suite"),
    "twopaths": (cmd_twopaths, "compare the two directed 2-path counts"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", type=Path)
    common.add_argument("--digraph", type=Path)
    common.add_argument("--pattern", type=Path, help="graph H that the ordering prefix must induce")
    common.add_argument("--ordering", type=Path, help="file holding an 'h=<int> v1 v2 ...' line")
    common.add_argument("--config", type=Path, help="claim-suite key=value file")
    common.add_argument("--n", type=int)
    common.add_argument("--p", type=float)
    common.add_argument("--seed", type=int)
    common.add_argument("--trials", type=int)
    common.add_argument("--predicate", choices=["seymour", "sullivan", "both"], default="seymour")
    common.add_argument("--epsilon", type=float)
    common.add_argument("--c-small", dest="c_small", type=float)
    common.add_argument("--copies", type=int)
    common.add_argument("--budget", type=int,
                        help="adversarial iterations, or node budget for enumerate")
    common.add_argument("--edge-limit", type=int, default=30)
    common.add_argument("--no-prune", action="store_true")
    common.add_argument("--force", action="store_true", help="allow pruned search past --edge-limit")
    common.add_argument("--backtracks", type=int, default=1000)
    common.add_argument("--exhaustive", action="store_true")
    common.add_argument("--threads", type=int)
    common.add_argument("--out", type=Path, help="artifact output (graph, digraph or ordering)")
    common.add_argument("--report", type=Path, help="report file (default stdout)")
    common.add_argument("--format", choices=["records", "csv"], default="records")

    parser = argparse.ArgumentParser(prog="secondnbr", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def run_command(argv=None) -> tuple[int, Report | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    if args.threads is not None and args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 2, None
    report = Report(args.command, {})
    func = COMMANDS[args.command][0]
    try:
        func(args, report)
    except (UsageError, FormatError, ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, None
    text = report.render(args.format)
    if args.report is not None:
        args.report.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return (1 if report.violations else 0), report


def main(argv=None) -> int:
    code, _ = run_command(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
