"""Independent reference implementations used to pin expected values.

Everything here is deliberately naive: permutation scans, brute-force
subset enumeration, or thin wrappers over networkx.  The library under test
must agree with these on every graph small enough to afford them.
"""

import itertools

import networkx as nx


def to_nx(graph):
    """A simple hypergraph as a networkx Graph."""
    assert graph.is_simple()
    out = nx.Graph()
    out.add_nodes_from(graph.vertices)
    for s in graph.edges.values():
        a, b = sorted(s)
        out.add_edge(a, b)
    return out


def naive_embeddings(motif, graph):
    """Every injective vertex map sending each motif edge onto some edge
    vertex set of the target, as a sorted list of mapping dicts."""
    found = []
    target_sets = set(graph.edges.values())
    motif_sets = list(motif.edges.values())
    k = len(motif.vertices)
    for choice in itertools.permutations(graph.vertices, k):
        mapping = dict(zip(motif.vertices, choice))
        if all(
            frozenset(mapping[v] for v in s) in target_sets for s in motif_sets
        ):
            found.append(mapping)
    found.sort(key=lambda m: tuple(m[v] for v in motif.vertices))
    return found


def naive_independence(graph):
    """Largest set of vertices with no two together inside a 2-vertex edge."""
    pairs = {s for s in graph.edges.values() if len(s) == 2}
    best = 0
    names = graph.vertices
    for size in range(len(names), -1, -1):
        for combo in itertools.combinations(names, size):
            chosen = set(combo)
            if not any(s <= chosen for s in pairs):
                best = size
                break
        if best:
            break
    return best


def nx_degeneracy(graph):
    g = to_nx(graph)
    if not g.nodes:
        return 0
    return max(nx.core_number(g).values(), default=0)


def nx_component_sets(graph):
    return {frozenset(c) for c in nx.connected_components(to_nx(graph))}


def naive_acyclic_profile(graph):
    """Orientation census by sink count, via networkx DAG detection."""
    assert graph.is_simple()
    edges = [tuple(sorted(s)) for s in graph.edges.values()]
    profile = {}
    for flips in itertools.product((False, True), repeat=len(edges)):
        directed = nx.DiGraph()
        directed.add_nodes_from(graph.vertices)
        for (a, b), flip in zip(edges, flips):
            directed.add_edge(*((b, a) if flip else (a, b)))
        if nx.is_directed_acyclic_graph(directed):
            sinks = sum(
                1 for v in directed.nodes if directed.out_degree(v) == 0
            )
            profile[sinks] = profile.get(sinks, 0) + 1
    return profile


def naive_overlap_parts(graph, k):
    """Union-of-component parts computed straight from the definition,
    with a plain BFS over distinct edge vertex sets."""
    sets = sorted(graph.edge_sets(), key=lambda s: tuple(sorted(s)))
    unseen = set(range(len(sets)))
    parts = set()
    while unseen:
        start = min(unseen)
        queue = [start]
        unseen.discard(start)
        component = {start}
        while queue:
            current = queue.pop()
            for other in list(unseen):
                if k != float("inf") and len(sets[current] & sets[other]) >= k:
                    unseen.discard(other)
                    queue.append(other)
                    component.add(other)
        parts.add(frozenset().union(*(sets[i] for i in component)))
    return parts
