"""Overlap line graphs and the clusterings they induce.

The line graph at threshold k has one vertex per distinct edge vertex set
of the origin hypergraph (parallel edges collapse to a single vertex) and
joins two of them when they overlap in at least k vertices.  Unioning each
connected component's member sets yields the overlap clustering; vertices
on no edge end up in no part.
"""

from __future__ import annotations

import math

from .graphs import Hypergraph
from .partitions import PartitionedSet

INFINITE = math.inf


def check_threshold(k):
    """Overlap thresholds are integers >= 1, or infinity."""
    if k == INFINITE:
        return INFINITE
    if isinstance(k, bool) or not isinstance(k, int):
        raise ValueError(f"overlap threshold must be an integer >= 1 or infinity, got {k!r}")
    if k < 1:
        raise ValueError(f"overlap threshold must be at least 1, got {k}")
    return k


def parse_threshold(text):
    """Parse a threshold from CLI or JSON: an int, or 'inf'."""
    if isinstance(text, (int, float)):
        return check_threshold(text)
    lowered = str(text).strip().lower()
    if lowered in ("inf", "infinity", "oo"):
        return INFINITE
    try:
        return check_threshold(int(lowered))
    except ValueError as exc:
        raise ValueError(f"bad overlap threshold: {text!r}") from exc


def threshold_to_json(k):
    return "inf" if k == INFINITE else k


def set_name(members):
    """Canonical line-graph vertex name for a vertex set: "{a,b,c}"."""
    return "{" + ",".join(sorted(members)) + "}"


class LineGraph:
    """A simple graph over distinct edge vertex sets of an origin graph.

    ``graph`` is the simple graph itself (vertices named via set_name),
    ``members`` maps each line vertex back to the set it stands for, and
    ``labels``, when present, carries the per-vertex annotation used by the
    shared-edge scheme.
    """

    __slots__ = ("graph", "origin", "members", "labels")

    def __init__(self, graph, origin, members, labels=None):
        self.graph = graph
        self.origin = origin
        self.members = members
        self.labels = labels

    def __repr__(self):
        return (
            f"LineGraph({len(self.members)} vertices, "
            f"{len(self.graph.edges)} edges)"
        )


def _line_graph_over(sets, origin, min_overlap, labels=None):
    k = check_threshold(min_overlap)
    members = {set_name(s): s for s in sets}
    names = sorted(members)
    edges = {}
    if k != INFINITE:
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                if len(members[a] & members[b]) >= k:
                    edges[f"{a}~{b}"] = frozenset((a, b))
    graph = Hypergraph(names, edges)
    return LineGraph(graph, origin, members, labels)


def line_graph(graph, min_overlap):
    """The overlap line graph of a hypergraph at the given threshold.

    At threshold infinity there are never enough shared vertices, so the
    result has no edges.  On a simple graph at threshold 1 this is the
    classical line graph.
    """
    return _line_graph_over(graph.edge_sets(), graph, min_overlap)


def connected_components(graph):
    """Components of a simple graph as a partitioned set; isolated vertices
    become singleton parts, so every vertex lands in exactly one part."""
    if not graph.is_simple():
        raise ValueError("connected_components requires a simple graph")
    parent = {v: v for v in graph.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s in graph.edges.values():
        u, w = sorted(s)
        ru, rw = find(u), find(w)
        if ru != rw:
            parent[ru] = rw
    groups = {}
    for v in graph.vertices:
        groups.setdefault(find(v), set()).add(v)
    return PartitionedSet(graph.vertices, groups.values())


def component_member_unions(line):
    """Union the member sets across each component of a line graph."""
    comps = connected_components(line.graph)
    parts = []
    for comp in comps.parts:
        parts.append(frozenset().union(*(line.members[name] for name in comp)))
    return parts


def overlap_components(graph, min_overlap):
    """The overlap clustering of a hypergraph: one part per component of the
    line graph at the given threshold, each part the union of its component's
    edge sets.  Underlying set is the full vertex set; vertices on no edge
    appear in no part."""
    line = line_graph(graph, min_overlap)
    return PartitionedSet(graph.vertices, component_member_unions(line))


def is_overlap_connected(graph, min_overlap):
    """Whether the overlap clustering has a part equal to the whole vertex
    set.  False for the empty graph, which has no parts at all."""
    if not graph.vertices:
        return False
    full = frozenset(graph.vertices)
    return full in overlap_components(graph, min_overlap).parts


def edge_set_parts(graph):
    """The limiting clustering at threshold infinity, spelled directly: one
    part per distinct edge vertex set."""
    return PartitionedSet(graph.vertices, graph.edge_sets())
