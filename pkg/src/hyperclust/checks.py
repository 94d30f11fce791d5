"""Corpus generation and machine verification of the clustering axioms.

The checks here quantify over finite corpora: every hypergraph up to
isomorphism within configurable size bounds, all simple graphs up to a
separate vertex bound, all inclusion morphisms from restrictions, and all
injective morphisms between small members.  A passing report is therefore
bounded evidence, not a proof; each report records the bounds it ran under
and every failure carries enough data to replay it in isolation.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import os
import pathlib
import random
from dataclasses import dataclass

from .components import (
    INFINITE,
    _line_graph_over,
    component_member_unions,
    set_name,
    threshold_to_json,
)
from .graphs import (
    GraphMorphism,
    Hypergraph,
    SizeLimitError,
    canonical_key,
    graph_distance,
    hypergraph_from_json,
    hypergraph_to_json,
    iso_check,
    restrict,
    triangle_with_tail,
    validate_graph_morphism,
)
from .motifs import enumerate_embeddings, expansion_edge_sets
from .partitions import PartitionedSet, is_refinement
from .schemes import MotifScheme, cluster, materialize_motifs, scheme_label

_CACHE_VERSION = 1
DEFAULT_GUARD = 2_000_000


@dataclass(frozen=True)
class CorpusBounds:
    """Size limits for the exhaustive corpus.

    Hypergraphs are enumerated up to isomorphism with at most
    ``max_vertices`` vertices, ``max_edges`` edges (parallel edges counted
    separately), and ``max_edge_size`` vertices per edge.  Simple graphs are
    additionally included up to ``max_simple_vertices``.  Injective maps
    between members are enumerated exhaustively only when both endpoints
    have at most ``max_morphism_vertices`` vertices.
    """

    max_vertices: int = 5
    max_edges: int = 4
    max_edge_size: int = 4
    max_morphism_vertices: int = 4
    max_simple_vertices: int = 6


def _multiset_count(universe, size):
    if size == 0:
        return 1
    if universe == 0:
        return 0
    return math.comb(universe + size - 1, size)


def estimate_candidates(bounds):
    """Upper bound on the labelled hypergraphs enumerated before dedup."""
    total = 0
    for n in range(bounds.max_vertices + 1):
        u = sum(
            math.comb(n, j)
            for j in range(1, min(n, bounds.max_edge_size) + 1)
        )
        total += sum(
            _multiset_count(u, k) for k in range(bounds.max_edges + 1)
        )
    return total


def _vertex_names(n):
    width = len(str(n))
    return [f"v{i:0{width}d}" if n > 9 else f"v{i}" for i in range(1, n + 1)]


def _graph_sort_key(graph):
    shape = tuple(sorted(len(s) for s in graph.edges.values()))
    encoded = tuple(sorted(tuple(sorted(s)) for s in graph.edges.values()))
    return (len(graph.vertices), len(graph.edges), shape, encoded, graph.vertices)


def _enumerate_hypergraph_classes(bounds):
    out = []
    seen = set()
    for n in range(bounds.max_vertices + 1):
        names = _vertex_names(n)
        subsets = []
        for size in range(1, min(n, bounds.max_edge_size) + 1):
            subsets.extend(itertools.combinations(names, size))
        for count in range(bounds.max_edges + 1):
            for combo in itertools.combinations_with_replacement(subsets, count):
                edges = {f"e{i + 1}": members for i, members in enumerate(combo)}
                graph = Hypergraph(names, edges)
                key = canonical_key(graph)
                if key not in seen:
                    seen.add(key)
                    out.append(graph)
    return out


def _atlas_extras(bounds):
    """Simple graphs beyond the hypergraph enumeration, from the atlas of
    graphs on up to seven vertices."""
    if bounds.max_simple_vertices <= 0:
        return []
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for atlas_graph in graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if n > bounds.max_simple_vertices:
            break
        m = atlas_graph.number_of_edges()
        if (
            n <= bounds.max_vertices
            and m <= bounds.max_edges
            and bounds.max_edge_size >= 2
        ):
            continue
        names = _vertex_names(n)
        rename = {node: names[i] for i, node in enumerate(sorted(atlas_graph.nodes))}
        pairs = sorted(
            tuple(sorted((rename[a], rename[b]))) for a, b in atlas_graph.edges
        )
        edges = {f"e{i + 1}": pair for i, pair in enumerate(pairs)}
        out.append(Hypergraph(names, edges))
    return out


def _cache_dir():
    env = os.environ.get("HYPERCLUST_CACHE_DIR")
    if env:
        return pathlib.Path(env)
    return pathlib.Path.home() / ".cache" / "hyperclust"


def _cache_path(bounds):
    digest = hashlib.sha256(
        repr((_CACHE_VERSION, bounds)).encode()
    ).hexdigest()[:16]
    return _cache_dir() / f"corpus-{digest}.jsonl"


def _load_cached_graphs(bounds):
    path = _cache_path(bounds)
    try:
        text = path.read_text()
    except OSError:
        return None
    graphs = []
    try:
        for line in text.splitlines():
            if line.strip():
                graphs.append(hypergraph_from_json(json.loads(line)))
    except (ValueError, KeyError):
        return None
    return graphs


def _store_cached_graphs(bounds, graphs):
    path = _cache_path(bounds)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with tmp.open("w") as handle:
            for graph in graphs:
                handle.write(json.dumps(hypergraph_to_json(graph), sort_keys=True))
                handle.write("\n")
        os.replace(tmp, path)
    except OSError:
        pass


def _inclusion_morphisms(graph):
    out = []
    names = graph.vertices
    for size in range(len(names) + 1):
        for part in itertools.combinations(names, size):
            out.append(restrict(graph, part)[1])
    return out


def _pair_morphisms(sources, targets):
    out = []
    for src in sources:
        if not src.vertices:
            continue
        for tgt in targets:
            out.extend(enumerate_embeddings(src, tgt))
    return out


def _build_morphisms(graphs, bounds):
    morphisms = []
    for graph in graphs:
        morphisms.extend(_inclusion_morphisms(graph))
    small = [
        g for g in graphs if len(g.vertices) <= bounds.max_morphism_vertices
    ]
    morphisms.extend(_pair_morphisms(small, small))
    return morphisms


class Corpus:
    """An immutable collection of test graphs plus morphisms between them.

    ``id_base`` offsets the printed graph ids; chunked corpora built for
    parallel checks use it so their reports name graphs consistently with
    the parent corpus.
    """

    __slots__ = ("bounds", "graphs", "morphisms", "_index", "_id_base")

    def __init__(self, bounds, graphs, morphisms, id_base=0):
        self.bounds = bounds
        self.graphs = tuple(graphs)
        self.morphisms = tuple(morphisms)
        self._index = {g: i for i, g in enumerate(self.graphs)}
        self._id_base = id_base

    def __repr__(self):
        return (
            f"Corpus({len(self.graphs)} graphs, "
            f"{len(self.morphisms)} morphisms)"
        )

    def graph_id(self, graph):
        index = self._index.get(graph)
        return None if index is None else f"g{index + self._id_base}"

    def simple_graphs(self):
        return [g for g in self.graphs if g.is_simple()]

    def contains_isomorph(self, graph):
        fingerprint = _graph_sort_key(graph)[:3]
        for member in self.graphs:
            if _graph_sort_key(member)[:3] != fingerprint:
                continue
            try:
                if iso_check(member, graph, bound=max(8, len(graph.vertices)))[0]:
                    return True
            except SizeLimitError:
                continue
        return False

    def with_extra_graphs(self, extras, build_morphisms=False):
        """A corpus extended by the given graphs (isomorphs are skipped).

        Morphisms touching the new graphs are only built on request; the
        checks that take ad-hoc extras (hull arguments and the like) quantify
        over graphs, not morphisms.
        """
        added = []
        combined = self
        for graph in extras:
            if not combined.contains_isomorph(graph):
                added.append(graph)
                combined = Corpus(
                    self.bounds, self.graphs + tuple(added), self.morphisms
                )
        if not added:
            return self
        morphisms = list(self.morphisms)
        if build_morphisms:
            for graph in added:
                morphisms.extend(_inclusion_morphisms(graph))
            old_small = [
                g
                for g in self.graphs
                if len(g.vertices) <= self.bounds.max_morphism_vertices
            ]
            new_small = [
                g
                for g in added
                if len(g.vertices) <= self.bounds.max_morphism_vertices
            ]
            morphisms.extend(_pair_morphisms(new_small, old_small + new_small))
            morphisms.extend(_pair_morphisms(old_small, new_small))
        return Corpus(self.bounds, self.graphs + tuple(added), morphisms)


def generate_corpus(bounds=None, use_cache=True, guard=DEFAULT_GUARD):
    """Build the exhaustive corpus for the given bounds.

    Deduplicated graphs are cached on disk keyed by the bounds; morphisms
    are cheap enough to rebuild on every load.
    """
    bounds = bounds or CorpusBounds()
    estimate = estimate_candidates(bounds)
    if estimate > guard:
        raise SizeLimitError(
            f"corpus bounds would enumerate about {estimate} labelled "
            f"candidates, over the guard of {guard}"
        )
    graphs = _load_cached_graphs(bounds) if use_cache else None
    if graphs is None:
        graphs = _enumerate_hypergraph_classes(bounds)
        graphs.extend(_atlas_extras(bounds))
        graphs.sort(key=_graph_sort_key)
        if use_cache:
            _store_cached_graphs(bounds, graphs)
    morphisms = _build_morphisms(graphs, bounds)
    return Corpus(bounds, graphs, morphisms)


# ---------------------------------------------------------------------------
# cluster cache

class ClusterCache:
    """Memoizes clusterings and expansion edge sets across checks.

    Keys include the scheme, so a cache is best scoped to one scheme grid
    cell; expansion sets are keyed by the concrete motif tuple and therefore
    shared between overlap thresholds.
    """

    __slots__ = ("_parts", "_sets")

    def __init__(self):
        self._parts = {}
        self._sets = {}

    def expansion_sets(self, motifs, graph):
        key = (motifs, graph)
        found = self._sets.get(key)
        if found is None:
            found = expansion_edge_sets(motifs, graph)
            self._sets[key] = found
        return found

    def parts(self, scheme, graph):
        key = (scheme, graph)
        found = self._parts.get(key)
        if found is None:
            if isinstance(scheme, MotifScheme):
                motifs = tuple(materialize_motifs(scheme.motifs, graph))
                sets = self.expansion_sets(motifs, graph)
                line = _line_graph_over(sets, graph, scheme.min_overlap)
                found = PartitionedSet(
                    graph.vertices, component_member_unions(line)
                )
            else:
                found = cluster(scheme, graph)
            self._parts[key] = found
        return found


# ---------------------------------------------------------------------------
# reports

class CheckReport:
    """Outcome of one corpus-level check.

    ``counterexamples`` is a tuple of JSON-ready dicts, each self-contained:
    replaying the failing instance needs nothing beyond the entry itself.
    """

    __slots__ = ("check", "schemes", "passed", "statistics", "counterexamples")

    def __init__(self, check, schemes, passed, statistics, counterexamples):
        self.check = check
        self.schemes = tuple(schemes)
        self.passed = bool(passed)
        self.statistics = dict(statistics)
        self.counterexamples = tuple(counterexamples)

    def __repr__(self):
        verdict = "pass" if self.passed else "fail"
        return f"CheckReport({self.check}, {verdict})"

    def to_json(self, limit=None):
        shown = list(self.counterexamples)
        statistics = dict(self.statistics)
        if limit is not None and len(shown) > limit:
            shown = shown[:limit]
        statistics["counterexamples_total"] = len(self.counterexamples)
        statistics["counterexamples_shown"] = len(shown)
        return {
            "check": self.check,
            "schemes": list(self.schemes),
            "verdict": "pass" if self.passed else "fail",
            "statistics": statistics,
            "counterexamples": shown,
        }


def _graph_ref(corpus, graph):
    ref = {"graph": hypergraph_to_json(graph)}
    gid = corpus.graph_id(graph) if corpus is not None else None
    if gid is not None:
        ref["id"] = gid
    return ref


def _part_list(part):
    return sorted(part)


# ---------------------------------------------------------------------------
# the check battery

def check_excisive(scheme, corpus, cache=None):
    """Every discovered part must reappear when its restriction is
    re-clustered."""
    cache = cache or ClusterCache()
    bad = []
    parts_checked = 0
    for graph in corpus.graphs:
        clustered = cache.parts(scheme, graph)
        for part in clustered.sorted_parts():
            parts_checked += 1
            sub = restrict(graph, part)[0]
            again = cache.parts(scheme, sub)
            if frozenset(part) not in again.parts:
                entry = _graph_ref(corpus, graph)
                entry["part"] = list(part)
                bad.append(entry)
    statistics = {
        "graphs": len(corpus.graphs),
        "parts_checked": parts_checked,
        "failures": len(bad),
    }
    return CheckReport(
        "excisive", [scheme_label(scheme)], not bad, statistics, bad
    )


def check_functorial(scheme, corpus, cache=None):
    """Every corpus morphism must send parts into parts."""
    cache = cache or ClusterCache()
    bad = []
    for morphism in corpus.morphisms:
        source_parts = cache.parts(scheme, morphism.source)
        if not source_parts.parts:
            continue
        target_parts = cache.parts(scheme, morphism.target).parts
        vmap = morphism.map
        for part in source_parts.sorted_parts():
            image = frozenset(vmap[v] for v in part)
            if not any(image <= q for q in target_parts):
                entry = {
                    "source": _graph_ref(corpus, morphism.source),
                    "target": _graph_ref(corpus, morphism.target),
                    "map": dict(sorted(vmap.items())),
                    "part": list(part),
                }
                bad.append(entry)
    statistics = {
        "graphs": len(corpus.graphs),
        "morphisms": len(corpus.morphisms),
        "failures": len(bad),
    }
    return CheckReport(
        "functorial", [scheme_label(scheme)], not bad, statistics, bad
    )


def check_refines(finer_scheme, coarser_scheme, corpus, cache=None):
    """First scheme's clustering must refine the second's on every graph."""
    cache = cache or ClusterCache()
    bad = []
    for graph in corpus.graphs:
        fine = cache.parts(finer_scheme, graph)
        coarse = cache.parts(coarser_scheme, graph)
        ok, offender = is_refinement(fine, coarse)
        if not ok:
            entry = _graph_ref(corpus, graph)
            entry["part"] = _part_list(offender)
            bad.append(entry)
    statistics = {"graphs": len(corpus.graphs), "failures": len(bad)}
    return CheckReport(
        "refines",
        [scheme_label(finer_scheme), scheme_label(coarser_scheme)],
        not bad,
        statistics,
        bad,
    )


def check_scheme_equal(first_scheme, second_scheme, corpus, cache=None):
    """Both schemes must produce identical part sets on every graph."""
    cache = cache or ClusterCache()
    bad = []
    for graph in corpus.graphs:
        first = cache.parts(first_scheme, graph).parts
        second = cache.parts(second_scheme, graph).parts
        if first != second:
            entry = _graph_ref(corpus, graph)
            entry["first_only"] = sorted(
                (_part_list(p) for p in first - second)
            )
            entry["second_only"] = sorted(
                (_part_list(p) for p in second - first)
            )
            bad.append(entry)
    statistics = {"graphs": len(corpus.graphs), "failures": len(bad)}
    return CheckReport(
        "equal",
        [scheme_label(first_scheme), scheme_label(second_scheme)],
        not bad,
        statistics,
        bad,
    )


# ---------------------------------------------------------------------------
# representation hulls

def _expansion_sets_cached(cache, motifs, graph):
    if cache is not None:
        return cache.expansion_sets(motifs, graph)
    return expansion_edge_sets(motifs, graph)


def _corpus_plus(corpus, graph):
    return corpus.with_extra_graphs([graph])


def hull_check(motifs, graph, corpus, cache=None):
    """Adjoining a graph to a motif set is a no-op exactly when its
    expansion is spanned.

    Both sides are computed and reported: whether the expansion of ``graph``
    has a spanning edge, and whether the two expansions agree on every
    corpus member (the graph itself included).  The check passes when the
    two sides agree, as the hull property predicts.
    """
    motifs = tuple(motifs)
    extended = motifs + (graph,)
    sets = _expansion_sets_cached(cache, motifs, graph)
    spanned = frozenset(graph.vertices) in sets
    members = _corpus_plus(corpus, graph)
    differences = []
    for member in members.graphs:
        base = _expansion_sets_cached(cache, motifs, member)
        more = _expansion_sets_cached(cache, extended, member)
        if base != more:
            entry = _graph_ref(members, member)
            entry["gained_edge_sets"] = sorted(set_name(s) for s in more - base)
            differences.append(entry)
    equal = not differences
    passed = spanned == equal
    statistics = {
        "spanned": spanned,
        "edge_sets_equal": equal,
        "graphs_checked": len(members.graphs),
        "differing_graphs": len(differences),
    }
    if differences:
        statistics["difference_witness"] = differences[0]
    counterexamples = []
    if not passed:
        counterexamples.append(
            {
                "spanned": spanned,
                "edge_sets_equal": equal,
                "witness": differences[0] if differences else None,
            }
        )
    return CheckReport("hull", [], passed, statistics, counterexamples)


def connected_hull_check(motifs, graph, min_overlap, corpus, cache=None):
    """Scheme-level hull: corpus-level scheme equality must imply that the
    graph's expansion is connected at the threshold.

    The reverse implication is asserted only at threshold 1; for larger
    thresholds it is merely reported, since it is known to fail there.
    """
    motifs = tuple(motifs)
    cache = cache or ClusterCache()
    base_scheme = MotifScheme(motifs, min_overlap)
    extended_scheme = MotifScheme(motifs + (graph,), min_overlap)
    members = _corpus_plus(corpus, graph)
    differences = []
    for member in members.graphs:
        first = cache.parts(base_scheme, member).parts
        second = cache.parts(extended_scheme, member).parts
        if first != second:
            entry = _graph_ref(members, member)
            entry["first_only"] = sorted(_part_list(p) for p in first - second)
            entry["second_only"] = sorted(_part_list(p) for p in second - first)
            differences.append(entry)
    equal = not differences
    sets = cache.expansion_sets(motifs, graph)
    if graph.vertices:
        line = _line_graph_over(sets, graph, min_overlap)
        connected = frozenset(graph.vertices) in set(
            component_member_unions(line)
        )
    else:
        connected = False
    forward_ok = (not equal) or connected
    reverse_holds = (not connected) or equal
    reverse_asserted = min_overlap == 1
    passed = forward_ok and (reverse_holds or not reverse_asserted)
    statistics = {
        "k": threshold_to_json(min_overlap),
        "schemes_equal": equal,
        "expansion_connected": connected,
        "forward_ok": forward_ok,
        "reverse_holds": reverse_holds,
        "reverse_asserted": reverse_asserted,
        "graphs_checked": len(members.graphs),
        "differing_graphs": len(differences),
    }
    if differences:
        statistics["difference_witness"] = differences[0]
    counterexamples = []
    if not forward_ok:
        counterexamples.append(
            {
                "reason": "schemes agree on the corpus but the expansion "
                "is not connected at the threshold",
                "expansion_edge_sets": sorted(set_name(s) for s in sets),
            }
        )
    if reverse_asserted and not reverse_holds:
        counterexamples.append(
            {
                "reason": "expansion is connected at threshold 1 but the "
                "schemes differ on the corpus",
                "witness": differences[0],
            }
        )
    return CheckReport("connected-hull", [], passed, statistics, counterexamples)


# ---------------------------------------------------------------------------
# finite representability witness

class FiniteRepWitness:
    """Outcome of the tailed-triangle witness construction."""

    __slots__ = (
        "radius",
        "witness",
        "blocked_without",
        "connected_with",
        "per_graph_radius",
    )

    def __init__(
        self, radius, witness, blocked_without, connected_with, per_graph_radius
    ):
        self.radius = radius
        self.witness = witness
        self.blocked_without = blocked_without
        self.connected_with = connected_with
        self.per_graph_radius = tuple(per_graph_radius)

    @property
    def ok(self):
        return self.blocked_without and self.connected_with

    def to_json(self):
        return {
            "radius": self.radius,
            "witness": hypergraph_to_json(self.witness),
            "expansion_blocked_without_witness": self.blocked_without,
            "expansion_connected_with_witness": self.connected_with,
            "per_graph_radius": list(self.per_graph_radius),
            "verdict": "pass" if self.ok else "fail",
        }


def _triangle_vertices(graph):
    pairs = {s for s in graph.edges.values() if len(s) == 2}
    vertices = sorted({v for s in pairs for v in s})
    found = set()
    for a, b, c in itertools.combinations(vertices, 3):
        if (
            frozenset((a, b)) in pairs
            and frozenset((a, c)) in pairs
            and frozenset((b, c)) in pairs
        ):
            found.update((a, b, c))
    return found


def _triangle_radius(graph):
    anchors = _triangle_vertices(graph)
    if not anchors:
        raise ValueError(
            f"finite_rep_witness needs a triangle in every motif; "
            f"none found in a graph on {len(graph.vertices)} vertices"
        )
    worst = 0
    for v in graph.vertices:
        best = min(
            (
                d
                for d in (graph_distance(graph, v, a) for a in anchors)
                if d is not None
            ),
            default=None,
        )
        if best is None:
            raise ValueError(
                f"vertex {v!r} cannot reach a triangle; radius undefined"
            )
        worst = max(worst, best)
    return worst


def _expansion_connected_at_one(motifs, graph):
    sets = expansion_edge_sets(motifs, graph)
    if not graph.vertices:
        return False
    line = _line_graph_over(sets, graph, 1)
    return frozenset(graph.vertices) in set(component_member_unions(line))


def finite_rep_witness(motif_graphs):
    """For triangle-tailed motifs, exhibit the graph their expansions
    cannot reconnect.

    The radius is the largest distance from any vertex to a triangle across
    the given graphs; a tail one longer than that defeats every one of them
    at once, while representing the tailed graph by itself trivially works.
    """
    motifs = tuple(motif_graphs)
    if not motifs:
        raise ValueError("finite_rep_witness needs at least one motif")
    per_graph = [_triangle_radius(g) for g in motifs]
    radius = max(per_graph)
    witness = triangle_with_tail(radius + 1)
    blocked = not _expansion_connected_at_one(motifs, witness)
    connected = _expansion_connected_at_one((witness,), witness)
    return FiniteRepWitness(radius, witness, blocked, connected, per_graph)


# ---------------------------------------------------------------------------
# equal-parts search

@dataclass(frozen=True)
class SearchBounds:
    max_vertices: int = 9
    max_edges: int = 16
    max_edge_size: int = 3


class EqualPartsResult:
    """Outcome of the search for two components that both cover everything."""

    __slots__ = ("witness", "transcript", "exhaustive", "bounds", "trials")

    def __init__(self, witness, transcript, exhaustive, bounds, trials):
        self.witness = witness
        self.transcript = transcript
        self.exhaustive = exhaustive
        self.bounds = bounds
        self.trials = trials

    @property
    def outcome(self):
        return "witness" if self.witness is not None else "exhausted"

    def label(self):
        if self.witness is not None:
            return "witness"
        return (
            f"exhausted(max_vertices={self.bounds.max_vertices}, "
            f"max_edges={self.bounds.max_edges}, "
            f"max_edge_size={self.bounds.max_edge_size})"
        )

    def to_json(self):
        data = {
            "outcome": self.outcome,
            "exhaustive_search": self.exhaustive,
            "trials": self.trials,
            "bounds": {
                "max_vertices": self.bounds.max_vertices,
                "max_edges": self.bounds.max_edges,
                "max_edge_size": self.bounds.max_edge_size,
            },
        }
        if self.witness is not None:
            data["witness"] = hypergraph_to_json(self.witness)
            data["transcript"] = self.transcript
        return data


def validate_equal_parts_witness(graph):
    """Check that two distinct overlap-2 components both union to the full
    vertex set; returns the transcript or raises."""
    line = _line_graph_over(graph.edge_sets(), graph, 2)
    from .components import connected_components

    comps = connected_components(line.graph)
    full = frozenset(graph.vertices)
    described = []
    spanning = 0
    for comp in comps.sorted_parts():
        union = frozenset().union(*(line.members[name] for name in comp))
        covers = union == full and bool(full)
        spanning += covers
        described.append(
            {
                "edge_sets": list(comp),
                "union_size": len(union),
                "covers_all_vertices": covers,
            }
        )
    if spanning < 2:
        raise ValueError(
            f"not a witness: {spanning} component(s) cover all vertices, "
            f"need at least 2"
        )
    described.sort(key=lambda d: (-d["covers_all_vertices"], d["edge_sets"]))
    return {
        "vertices": len(graph.vertices),
        "distinct_edge_sets": len(line.members),
        "spanning_components": spanning,
        "components": described,
    }


def _exhaustive_equal_parts(bounds):
    for n in range(bounds.max_vertices + 1):
        names = _vertex_names(n)
        universe = []
        for size in range(1, min(n, bounds.max_edge_size) + 1):
            universe.extend(itertools.combinations(names, size))
        top = min(bounds.max_edges, len(universe))
        for count in range(top + 1):
            for combo in itertools.combinations(universe, count):
                edges = {f"e{i + 1}": s for i, s in enumerate(combo)}
                graph = Hypergraph(names, edges)
                try:
                    transcript = validate_equal_parts_witness(graph)
                except ValueError:
                    continue
                return graph, transcript
    return None, None


def _structured_equal_parts(bounds):
    """Sliding windows against a coordinate walk on three bands.

    On 3m vertices the m-step windows chain covers everything, and so does
    a walk of triples taking one vertex per band; bands keep the two
    families from ever sharing two vertices, so they stay in separate
    components.
    """
    if bounds.max_edge_size < 3:
        return None, None
    for n in range(9, bounds.max_vertices + 1, 3):
        m = n // 3
        if n % 3 or (n - 2) + (3 * m - 2) > bounds.max_edges:
            continue
        names = _vertex_names(n)
        edges = {}
        for i in range(n - 2):
            edges[f"w{i + 1}"] = (names[i], names[i + 1], names[i + 2])
        walk = [0, m, 2 * m]
        step = 0
        edges["b1"] = tuple(names[j] for j in walk)
        for i in range(3 * (m - 1)):
            walk[2 - step] += 1
            step = (step + 1) % 3
            edges[f"b{i + 2}"] = tuple(names[j] for j in walk)
        graph = Hypergraph(names, edges)
        try:
            return graph, validate_equal_parts_witness(graph)
        except ValueError:
            continue
    return None, None


def _random_equal_parts(bounds, seed, trials):
    rng = random.Random(seed)
    attempted = 0
    for _ in range(trials):
        n = rng.randint(5, bounds.max_vertices)
        names = _vertex_names(n)
        universe = []
        for size in range(2, min(n, bounds.max_edge_size) + 1):
            universe.extend(itertools.combinations(names, size))
        if not universe:
            continue
        count = rng.randint(4, min(bounds.max_edges, len(universe)))
        combo = rng.sample(universe, count)
        attempted += 1
        edges = {f"e{i + 1}": s for i, s in enumerate(combo)}
        graph = Hypergraph(names, edges)
        try:
            return graph, validate_equal_parts_witness(graph), attempted
        except ValueError:
            continue
    return None, None, attempted


def search_equal_parts_example(bounds=None, seed=0, random_trials=2000):
    """Look for a hypergraph whose overlap-2 clustering has two parts both
    equal to the whole vertex set.

    Small bounds are searched exhaustively; larger ones get a structured
    construction plus a seeded random lane.  A returned witness always
    carries its own validation transcript; nothing is ever fabricated.
    """
    bounds = bounds or SearchBounds()
    if bounds.max_vertices <= 4:
        witness, transcript = _exhaustive_equal_parts(bounds)
        return EqualPartsResult(witness, transcript, True, bounds, 0)
    witness, transcript = _structured_equal_parts(bounds)
    if witness is not None:
        return EqualPartsResult(witness, transcript, False, bounds, 0)
    witness, transcript, trials = _random_equal_parts(
        bounds, seed, random_trials
    )
    return EqualPartsResult(witness, transcript, False, bounds, trials)


# ---------------------------------------------------------------------------
# corpus self-checks used by the test suite

def find_invalid_morphisms(corpus):
    """Morphisms that fail validation; the corpus invariant says none do."""
    bad = []
    for morphism in corpus.morphisms:
        if not validate_graph_morphism(morphism).ok:
            bad.append(morphism)
    return bad
