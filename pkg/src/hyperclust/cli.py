"""Command-line front end.

Subcommands: cluster, phi, linegraph, check, witness, search, bench.
Exit codes: 0 success, 1 a property check failed, 2 usage or input error.
All JSON output is sorted so identical invocations produce identical bytes;
bench output contains wall times, which are exempt from that guarantee.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
import time

from .components import line_graph, parse_threshold, threshold_to_json
from .graphs import (
    Hypergraph,
    SizeLimitError,
    build_named,
    hypergraph_from_json,
    hypergraph_to_json,
    linear_triangle,
    random_degenerate_graph,
    validate_hypergraph,
)
from .motifs import BudgetExceededError, enumerate_embeddings, motif_expansion
from .partitions import clustering_to_json, remove_spurious
from .checks import (
    ClusterCache,
    Corpus,
    CorpusBounds,
    SearchBounds,
    check_excisive,
    check_functorial,
    check_refines,
    check_scheme_equal,
    connected_hull_check,
    finite_rep_witness,
    generate_corpus,
    hull_check,
    search_equal_parts_example,
)
from .schemes import (
    SPANNING_FAMILY,
    TAILED_TRIANGLE_FAMILY,
    ComponentScheme,
    MotifScheme,
    SharedEdgeScheme,
    ToyScheme,
    cluster,
    scheme_from_json,
    scheme_label,
    scheme_to_json,
)


def _load_json_file(path):
    with open(path) as handle:
        return json.load(handle)


def parse_graph_arg(text):
    """A graph argument is a builtin name or a path to a hypergraph JSON."""
    if text.startswith("@"):
        text = text[1:]
    if os.path.exists(text):
        graph = hypergraph_from_json(_load_json_file(text))
        report = validate_hypergraph(graph)
        if not report.ok:
            raise ValueError(f"{text}: {report.violations[0]}")
        return graph
    try:
        return build_named(text)
    except ValueError:
        raise ValueError(
            f"graph argument {text!r} is neither a file nor a builtin name"
        ) from None


def _parse_motif_token(token):
    token = token.strip()
    if token in (SPANNING_FAMILY, TAILED_TRIANGLE_FAMILY):
        return token
    return parse_graph_arg(token)


def parse_motif_list(text):
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    tokens = [t for t in body.split(",") if t.strip()]
    if not tokens:
        return ()
    return tuple(_parse_motif_token(t) for t in tokens)


def parse_scheme_spec(text):
    """Scheme specs: ``classic``, ``toy:<id>``, ``sigma[:MOTIF]``,
    ``representable:{M1,M2},k=K``, or ``@file.json``."""
    text = text.strip()
    if text.startswith("@"):
        return scheme_from_json(_load_json_file(text[1:]))
    if text == "classic":
        return ComponentScheme()
    if text.startswith("toy:"):
        return ToyScheme(text[len("toy:"):])
    if text == "sigma":
        return SharedEdgeScheme(linear_triangle())
    if text.startswith("sigma:"):
        return SharedEdgeScheme(parse_graph_arg(text[len("sigma:"):]))
    if text.startswith("representable:"):
        body = text[len("representable:"):]
        k = 1
        if ",k=" in body:
            body, _, tail = body.rpartition(",k=")
            k = parse_threshold(tail)
        return MotifScheme(parse_motif_list(body), k)
    raise ValueError(f"unrecognized scheme spec: {text!r}")


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(data, out_path):
    _emit(json.dumps(data, indent=2, sort_keys=True) + "\n", out_path)


# ---------------------------------------------------------------------------
# subcommands

def run_cluster(args):
    graph = parse_graph_arg(args.graph)
    scheme = parse_scheme_spec(args.scheme)
    parts = cluster(scheme, graph)
    if args.drop_spurious:
        parts = remove_spurious(parts)
    data = clustering_to_json(parts)
    data["scheme"] = scheme_to_json(scheme)
    _emit_json(data, args.out)
    return 0


def run_phi(args):
    graph = parse_graph_arg(args.graph)
    motifs = parse_motif_list(args.motifs)
    concrete = []
    for m in motifs:
        if not isinstance(m, Hypergraph):
            raise ValueError(
                f"phi needs concrete motifs; family marker {m!r} only makes "
                f"sense inside a representable scheme"
            )
        concrete.append(m)
    expansion = motif_expansion(concrete, graph, budget=args.budget)
    _emit_json(hypergraph_to_json(expansion), args.out)
    return 0


_DOT_COLORS = (
    "#1b6ca8",
    "#b0413e",
    "#3e8e41",
    "#8e44ad",
    "#c77d00",
    "#16786c",
    "#714b23",
    "#5d6d7e",
)


def _line_graph_dot(line):
    from .components import connected_components

    comps = connected_components(line.graph)
    color_of = {}
    for index, comp in enumerate(comps.sorted_parts()):
        for name in comp:
            color_of[name] = _DOT_COLORS[index % len(_DOT_COLORS)]
    lines = ["graph linegraph {"]
    for name in line.graph.vertices:
        lines.append(
            f'  "{name}" [style=filled, fillcolor="{color_of[name]}"];'
        )
    for a, b in sorted(tuple(sorted(s)) for s in line.graph.edges.values()):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def run_linegraph(args):
    graph = parse_graph_arg(args.graph)
    k = parse_threshold(args.k)
    line = line_graph(graph, k)
    data = {
        "k": threshold_to_json(k),
        "vertices": list(line.graph.vertices),
        "edges": sorted(sorted(s) for s in line.graph.edges.values()),
        "members": {
            name: sorted(line.members[name]) for name in line.graph.vertices
        },
    }
    if args.dot:
        _emit(_line_graph_dot(line), args.dot)
    _emit_json(data, args.out)
    return 0


def _corpus_bounds(args):
    return CorpusBounds(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        max_edge_size=args.max_edge_size,
        max_morphism_vertices=args.max_morphism_vertices,
        max_simple_vertices=args.max_simple_vertices,
    )


def _chunk_report(task):
    kind, payload = task
    if kind == "excisive":
        scheme, corpus = payload
        return check_excisive(scheme, corpus)
    if kind == "functorial":
        scheme, corpus = payload
        return check_functorial(scheme, corpus)
    if kind == "refines":
        finer, coarser, corpus = payload
        return check_refines(finer, coarser, corpus)
    scheme_a, scheme_b, corpus = payload
    return check_scheme_equal(scheme_a, scheme_b, corpus)


def _merge_reports(check, schemes, reports, graphs_total, morphisms_total):
    statistics = {"graphs": graphs_total}
    counterexamples = []
    passed = True
    parts = 0
    has_parts = False
    for report in reports:
        passed = passed and report.passed
        counterexamples.extend(report.counterexamples)
        if "parts_checked" in report.statistics:
            has_parts = True
            parts += report.statistics["parts_checked"]
    if has_parts:
        statistics["parts_checked"] = parts
    if check == "functorial":
        statistics["morphisms"] = morphisms_total
    statistics["failures"] = len(counterexamples)
    from .checks import CheckReport

    return CheckReport(check, schemes, passed, statistics, counterexamples)


def _parallel_check(kind, schemes, corpus, jobs):
    import concurrent.futures
    import multiprocessing

    if kind == "functorial":
        items = corpus.morphisms
    else:
        items = corpus.graphs
    size = max(1, math.ceil(len(items) / jobs))
    tasks = []
    for start in range(0, len(items), size):
        block = items[start:start + size]
        if kind == "functorial":
            chunk = Corpus(corpus.bounds, corpus.graphs, block)
        else:
            chunk = Corpus(corpus.bounds, block, (), id_base=start)
        tasks.append((kind, tuple(schemes) + (chunk,)))
    context = multiprocessing.get_context("fork")
    with concurrent.futures.ProcessPoolExecutor(
        max_workers=jobs, mp_context=context
    ) as pool:
        reports = list(pool.map(_chunk_report, tasks))
    return _merge_reports(
        kind,
        [scheme_label(s) for s in schemes],
        reports,
        len(corpus.graphs),
        len(corpus.morphisms),
    )


_CHECK_NAMES = ("excisive", "functorial", "refines", "equal", "hull", "connected-hull")


def run_check(args):
    if args.property not in _CHECK_NAMES:
        raise ValueError(
            f"unknown property {args.property!r}; choose from "
            f"{', '.join(_CHECK_NAMES)}"
        )
    bounds = _corpus_bounds(args)
    corpus = generate_corpus(bounds, use_cache=not args.no_cache)
    if args.extra:
        corpus = corpus.with_extra_graphs(
            [parse_graph_arg(t) for t in args.extra]
        )
    cache = ClusterCache()
    prop = args.property
    if prop in ("hull", "connected-hull"):
        if not args.motifs or not args.graph:
            raise ValueError(f"{prop} needs --motifs and --graph")
        motifs = parse_motif_list(args.motifs)
        for m in motifs:
            if not isinstance(m, Hypergraph):
                raise ValueError("hull checks need concrete motifs")
        graph = parse_graph_arg(args.graph)
        if prop == "connected-hull" or args.k is not None:
            if args.k is None:
                raise ValueError("connected-hull needs --k")
            k = parse_threshold(args.k)
            report = connected_hull_check(motifs, graph, k, corpus, cache)
        else:
            report = hull_check(motifs, graph, corpus, cache)
    elif prop in ("refines", "equal"):
        if not args.scheme or not args.scheme2:
            raise ValueError(f"{prop} needs --scheme and --scheme2")
        first = parse_scheme_spec(args.scheme)
        second = parse_scheme_spec(args.scheme2)
        if args.jobs > 1:
            report = _parallel_check(prop, (first, second), corpus, args.jobs)
        elif prop == "refines":
            report = check_refines(first, second, corpus, cache)
        else:
            report = check_scheme_equal(first, second, corpus, cache)
    else:
        if not args.scheme:
            raise ValueError(f"{prop} needs --scheme")
        scheme = parse_scheme_spec(args.scheme)
        if args.jobs > 1:
            report = _parallel_check(prop, (scheme,), corpus, args.jobs)
        elif prop == "excisive":
            report = check_excisive(scheme, corpus, cache)
        else:
            report = check_functorial(scheme, corpus, cache)
    _emit_json(report.to_json(limit=args.limit), args.out)
    return 0 if report.passed else 1


def run_witness(args):
    motifs = parse_motif_list(args.motifs)
    concrete = [m for m in motifs if isinstance(m, Hypergraph)]
    if len(concrete) != len(motifs):
        raise ValueError("witness needs concrete motifs")
    result = finite_rep_witness(concrete)
    _emit_json(result.to_json(), args.out)
    return 0 if result.ok else 1


def run_search(args):
    bounds = SearchBounds(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        max_edge_size=args.max_edge_size,
    )
    result = search_equal_parts_example(
        bounds, seed=args.seed, random_trials=args.trials
    )
    _emit_json(result.to_json(), args.out)
    return 0


def _bench_graph(family, n, cap, seed):
    if family == "random":
        rng = random.Random(f"{seed}:{n}")
        return random_degenerate_graph(n, cap, rng)
    if family == "grid":
        side = max(2, math.isqrt(n))
        names = {}
        pairs = []
        for row in range(side):
            for col in range(side):
                names[(row, col)] = f"v{row * side + col + 1}"
        for (row, col), name in names.items():
            if row + 1 < side:
                pairs.append(tuple(sorted((name, names[(row + 1, col)]))))
            if col + 1 < side:
                pairs.append(tuple(sorted((name, names[(row, col + 1)]))))
        from .graphs import _pair_graph

        return _pair_graph(list(names.values()), pairs)
    if family == "path":
        from .graphs import path

        return path(n)
    raise ValueError(f"unknown bench family: {family!r}")


def run_bench(args):
    motif = parse_graph_arg(args.motif)
    if not motif.is_simple():
        raise ValueError("bench motifs must be simple graphs")
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    if not sizes:
        raise ValueError("bench needs at least one size")
    rows = []
    for n in sizes:
        graph = _bench_graph(args.family, n, args.cap, args.seed)
        best = None
        count = 0
        for _ in range(args.repeat):
            started = time.perf_counter()
            count = len(enumerate_embeddings(motif, graph))
            elapsed = time.perf_counter() - started
            best = elapsed if best is None else min(best, elapsed)
        rows.append((len(graph.vertices), count, best))
    slope = fit_count_slope(rows)
    lines = ["n,embeddings,seconds"]
    for n, count, seconds in rows:
        lines.append(f"{n},{count},{seconds:.6f}")
    lines.append(f"# slope={slope:.4f}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def fit_count_slope(rows):
    """Least-squares slope of log(count) against log(n), using only sizes
    with a nonzero count; zero everywhere means slope zero."""
    import numpy

    xs = [n for n, count, _ in rows if count > 0]
    ys = [count for _, count, _ in rows if count > 0]
    if len(xs) < 2:
        return 0.0
    slope = numpy.polyfit(numpy.log(xs), numpy.log(ys), 1)[0]
    return float(slope)


# ---------------------------------------------------------------------------
# argument wiring

def _add_bounds_flags(parser):
    parser.add_argument("--max-vertices", type=int, default=5)
    parser.add_argument("--max-edges", type=int, default=4)
    parser.add_argument("--max-edge-size", type=int, default=4)
    parser.add_argument("--max-morphism-vertices", type=int, default=4)
    parser.add_argument("--max-simple-vertices", type=int, default=6)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hyperclust",
        description="Overlapping clusterings of hypergraphs, with machine-"
        "checked structural properties.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("cluster", help="cluster a hypergraph under a scheme")
    p.add_argument("graph", help="builtin name or hypergraph JSON path")
    p.add_argument("--scheme", required=True)
    p.add_argument("--drop-spurious", action="store_true")
    p.add_argument("--out")
    p.set_defaults(handler=run_cluster)

    p = sub.add_parser("phi", help="expand a graph along motifs")
    p.add_argument("graph")
    p.add_argument("--motifs", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(handler=run_phi)

    p = sub.add_parser("linegraph", help="overlap line graph at a threshold")
    p.add_argument("graph")
    p.add_argument("--k", required=True)
    p.add_argument("--dot", help="also write a DOT file colored by component")
    p.add_argument("--out")
    p.set_defaults(handler=run_linegraph)

    p = sub.add_parser("check", help="run a corpus-level property check")
    p.add_argument("property", help=", ".join(_CHECK_NAMES))
    p.add_argument("--scheme")
    p.add_argument("--scheme2")
    p.add_argument("--motifs")
    p.add_argument("--graph")
    p.add_argument("--k")
    p.add_argument(
        "--extra",
        action="append",
        default=[],
        help="additional corpus graph (builtin name or JSON path)",
    )
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int, default=25)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--out")
    _add_bounds_flags(p)
    p.set_defaults(handler=run_check)

    p = sub.add_parser(
        "witness", help="tailed-triangle witness against finite representability"
    )
    p.add_argument("--motifs", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=run_witness)

    p = sub.add_parser(
        "search", help="search for the two-spanning-components example"
    )
    p.add_argument("--max-vertices", type=int, default=9)
    p.add_argument("--max-edges", type=int, default=16)
    p.add_argument("--max-edge-size", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=2000)
    p.add_argument("--out")
    p.set_defaults(handler=run_search)

    p = sub.add_parser("bench", help="embedding-count scaling benchmark")
    p.add_argument("--motif", required=True)
    p.add_argument(
        "--family", choices=("random", "grid", "path"), default="random"
    )
    p.add_argument("--cap", type=int, default=2, help="degeneracy cap")
    p.add_argument("--sizes", required=True, help="comma-separated n values")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(handler=run_bench)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (
        ValueError,
        OSError,
        KeyError,
        SizeLimitError,
        BudgetExceededError,
        json.JSONDecodeError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
