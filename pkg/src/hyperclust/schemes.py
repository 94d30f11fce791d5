"""Clustering schemes: rules assigning each hypergraph a partitioned set
over its own vertices.

Four kinds are provided.  MotifScheme expands the graph along a motif list
and takes overlap components at a threshold.  SharedEdgeScheme glues motif
copies that share a full edge image.  ComponentScheme is plain connected
components on simple graphs, with isolated vertices left partless.  ToyScheme
carries the three hand-written rules used to separate the scheme axioms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .components import (
    LineGraph,
    _line_graph_over,
    check_threshold,
    component_member_unions,
    connected_components,
    is_overlap_connected,
    parse_threshold,
    set_name,
    threshold_to_json,
)
from .graphs import (
    Hypergraph,
    Validation,
    build_named,
    complete_graph,
    corner_glued_pair,
    edge_glued_chain,
    hypergraph_from_json,
    hypergraph_to_json,
    iso_check,
    simplex,
    triangle_with_tail,
)
from .motifs import enumerate_embeddings, expansion_edge_sets
from .partitions import PartitionedSet

# Family markers a MotifScheme may carry instead of concrete motifs; they
# materialize against each input graph, truncated by what could embed at all.
SPANNING_FAMILY = "E*"
TAILED_TRIANGLE_FAMILY = "R*"

TOY_RULES = ("always_one_part_except_K2", "component_rule", "noprops")


@dataclass(frozen=True)
class MotifScheme:
    """Expand along ``motifs`` and take overlap components at threshold
    ``min_overlap``.  Motif entries are hypergraphs or family markers."""

    motifs: tuple
    min_overlap: object

    def __post_init__(self):
        check_threshold(self.min_overlap)
        for m in self.motifs:
            if not isinstance(m, Hypergraph) and m not in (
                SPANNING_FAMILY,
                TAILED_TRIANGLE_FAMILY,
            ):
                raise ValueError(f"bad motif entry: {m!r}")


@dataclass(frozen=True)
class SharedEdgeScheme:
    """Cluster motif copies that share a full edge image."""

    motif: Hypergraph


@dataclass(frozen=True)
class ComponentScheme:
    """Connected components of a simple graph, isolated vertices partless."""


@dataclass(frozen=True)
class ToyScheme:
    """One of the hand-written example rules, by id."""

    rule: str

    def __post_init__(self):
        if self.rule not in TOY_RULES:
            raise ValueError(f"unknown toy rule: {self.rule!r}")


def materialize_motifs(entries, graph):
    """Resolve family markers against a concrete graph.

    The one-edge family truncates to the largest edge size present (bigger
    members cannot embed, since an edge image needs a target edge of exactly
    its size); the tailed-triangle family truncates by vertex count.
    """
    out = []
    for entry in entries:
        if entry == SPANNING_FAMILY:
            top = max((len(s) for s in graph.edges.values()), default=0)
            out.extend(simplex(n) for n in range(1, top + 1))
        elif entry == TAILED_TRIANGLE_FAMILY:
            top = len(graph.vertices) - 3
            out.extend(triangle_with_tail(i) for i in range(0, top + 1))
        else:
            out.append(entry)
    return out


# ---------------------------------------------------------------------------
# shared-edge scheme

def shared_edge_graph(motif, graph):
    """The labelled copy graph behind the shared-edge scheme.

    One vertex per distinct embedding image of ``motif`` in ``graph``; its
    label set collects, across all embeddings with that image, the image
    vertex sets of the motif's edges.  Two copies are joined exactly when
    their label sets intersect, i.e. when they share a full edge image.
    """
    embeddings = enumerate_embeddings(motif, graph)
    span = frozenset(motif.vertices)
    labels = {}
    for emb in embeddings:
        image = emb.image(span)
        bag = labels.setdefault(image, set())
        for s in motif.edges.values():
            bag.add(emb.image(s))
    images = sorted(labels, key=lambda s: tuple(sorted(s)))
    named_labels = {set_name(s): frozenset(labels[s]) for s in images}
    members = {set_name(s): s for s in images}
    names = sorted(members)
    edges = {}
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            if named_labels[a] & named_labels[b]:
                edges[f"{a}~{b}"] = frozenset((a, b))
    return LineGraph(Hypergraph(names, edges), graph, members, named_labels)


def _shared_edge_parts(motif, graph):
    line = shared_edge_graph(motif, graph)
    return PartitionedSet(graph.vertices, component_member_unions(line))


def validate_shared_edge_motif(motif):
    """Whether a motif is fit for the shared-edge scheme.

    Checks, in order: exactly three edges; gluing two copies along an edge
    loses exactly three vertices; the scheme sees that glued pair as a
    single all-vertex part; it sees the corner-glued pair as exactly two
    maximal parts; and the plain motif expansion of the corner-glued pair is
    connected at overlap threshold 3.
    """
    if len(motif.edges) != 3:
        return Validation(
            [f"motif needs exactly 3 edges, found {len(motif.edges)}"]
        )
    bad = []
    chained = None
    try:
        chained = edge_glued_chain(motif, 1)
    except ValueError as exc:
        bad.append(f"edge gluing failed: {exc}")
    if chained is not None:
        want = 2 * len(motif.vertices) - 3
        if len(chained.vertices) != want:
            bad.append(
                "gluing two copies along an edge should leave "
                f"{want} vertices, found {len(chained.vertices)}"
            )
        else:
            parts = _shared_edge_parts(motif, chained)
            if parts.parts != frozenset({frozenset(chained.vertices)}):
                bad.append("glued pair of copies is not a single all-vertex part")
    corner = None
    try:
        corner = corner_glued_pair(motif)
    except ValueError as exc:
        bad.append(f"corner gluing failed: {exc}")
    if corner is not None:
        from .partitions import remove_spurious

        parts = remove_spurious(_shared_edge_parts(motif, corner))
        if len(parts.parts) != 2:
            bad.append(
                f"corner-glued pair should split into two maximal parts, "
                f"found {len(parts.parts)}"
            )
        if not is_overlap_connected(
            Hypergraph._make(
                corner.vertices,
                {set_name(s): s for s in expansion_edge_sets([motif], corner)},
            ),
            3,
        ):
            bad.append("motif expansion of the corner-glued pair is not 3-connected")
    return Validation(bad)


# ---------------------------------------------------------------------------
# toy rules

_PAIR = complete_graph(2)
_TWO_PAIRS = Hypergraph("abcd", {"e1": "ab", "e2": "cd"})


def _single_part(graph):
    return PartitionedSet(graph.vertices, [frozenset(graph.vertices)])


def _singletons(graph):
    return PartitionedSet(graph.vertices, [{v} for v in graph.vertices])


def _pair_components(graph):
    # Connectivity through 2-vertex edges only; smaller edges keep their
    # vertices in place but do not join anything.
    parent = {v: v for v in graph.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s in graph.edges.values():
        if len(s) == 2:
            u, w = sorted(s)
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[ru] = rw
    groups = {}
    for v in graph.vertices:
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def _is_pair_like(graph):
    # The whole graph is a single 2-vertex edge, counting parallel copies of
    # that edge as the same thing.  Treating parallels like the plain pair is
    # forced: the parallel-pair graph maps into the pair and back, so any
    # rule that distinguishes them cannot respect morphisms.
    if len(graph.vertices) != 2 or not graph.edges:
        return False
    full = frozenset(graph.vertices)
    return all(s == full for s in graph.edges.values())


def _toy_one_part_except_pair(graph):
    if iso_check(graph, _PAIR)[0]:
        return _singletons(graph)
    return _single_part(graph)


def _toy_component_rule(graph):
    if any(len(s) > 2 for s in graph.edges.values()):
        return _single_part(graph)
    pair_like = _is_pair_like(graph)
    parts = []
    for component in _pair_components(graph):
        if len(component) == 2 and pair_like:
            parts.extend({v} for v in component)
        else:
            parts.append(component)
    return PartitionedSet(graph.vertices, parts)


def _toy_noprops(graph):
    if len(graph.vertices) <= 4:
        if iso_check(graph, _PAIR)[0]:
            return _singletons(graph)
        if iso_check(graph, _TWO_PAIRS)[0]:
            return PartitionedSet(graph.vertices, _pair_components(graph))
    return _single_part(graph)


_TOY_IMPL = {
    "always_one_part_except_K2": _toy_one_part_except_pair,
    "component_rule": _toy_component_rule,
    "noprops": _toy_noprops,
}


def toy_cluster(rule, graph):
    try:
        impl = _TOY_IMPL[rule]
    except KeyError:
        raise ValueError(f"unknown toy rule: {rule!r}") from None
    return impl(graph)


# ---------------------------------------------------------------------------
# evaluation and serialization

def cluster(scheme, graph):
    """Apply a scheme to a hypergraph.

    The result's underlying set is always the graph's full vertex set; which
    vertices get covered by parts is up to the scheme.
    """
    if isinstance(scheme, MotifScheme):
        motifs = materialize_motifs(scheme.motifs, graph)
        sets = expansion_edge_sets(motifs, graph)
        line = _line_graph_over(sets, graph, scheme.min_overlap)
        return PartitionedSet(graph.vertices, component_member_unions(line))
    if isinstance(scheme, SharedEdgeScheme):
        return _shared_edge_parts(scheme.motif, graph)
    if isinstance(scheme, ComponentScheme):
        if not graph.is_simple():
            raise ValueError("the component scheme requires a simple graph")
        comps = connected_components(graph)
        return PartitionedSet(
            graph.vertices, [p for p in comps.parts if len(p) >= 2]
        )
    if isinstance(scheme, ToyScheme):
        return toy_cluster(scheme.rule, graph)
    raise ValueError(f"not a scheme: {scheme!r}")


def _motif_entry_to_json(entry):
    if isinstance(entry, Hypergraph):
        return hypergraph_to_json(entry)
    return entry


def _motif_entry_from_json(entry):
    if isinstance(entry, str):
        if entry in (SPANNING_FAMILY, TAILED_TRIANGLE_FAMILY):
            return entry
        return build_named(entry)
    return hypergraph_from_json(entry)


def scheme_to_json(scheme):
    if isinstance(scheme, MotifScheme):
        return {
            "kind": "representable",
            "motifs": [_motif_entry_to_json(m) for m in scheme.motifs],
            "k": threshold_to_json(scheme.min_overlap),
        }
    if isinstance(scheme, SharedEdgeScheme):
        return {"kind": "sigma", "motif": hypergraph_to_json(scheme.motif)}
    if isinstance(scheme, ComponentScheme):
        return {"kind": "classic"}
    if isinstance(scheme, ToyScheme):
        return {"kind": "toy", "id": scheme.rule}
    raise ValueError(f"not a scheme: {scheme!r}")


def scheme_from_json(data):
    try:
        kind = data["kind"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed scheme JSON: {exc}") from exc
    if kind == "representable":
        motifs = tuple(_motif_entry_from_json(m) for m in data.get("motifs", []))
        return MotifScheme(motifs, parse_threshold(data.get("k", 1)))
    if kind == "sigma":
        return SharedEdgeScheme(hypergraph_from_json(data["motif"]))
    if kind == "classic":
        return ComponentScheme()
    if kind == "toy":
        return ToyScheme(data["id"])
    raise ValueError(f"unknown scheme kind: {kind!r}")


def scheme_label(scheme):
    """A short, stable human-readable tag for reports."""
    if isinstance(scheme, MotifScheme):
        names = []
        for m in scheme.motifs:
            if isinstance(m, Hypergraph):
                names.append(f"<{len(m.vertices)}v/{len(m.edges)}e>")
            else:
                names.append(m)
        k = threshold_to_json(scheme.min_overlap)
        return f"representable[{','.join(names)};k={k}]"
    if isinstance(scheme, SharedEdgeScheme):
        return "sigma"
    if isinstance(scheme, ComponentScheme):
        return "classic"
    if isinstance(scheme, ToyScheme):
        return f"toy:{scheme.rule}"
    return repr(scheme)
