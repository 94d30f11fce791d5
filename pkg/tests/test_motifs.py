import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperclust.graphs import (
    Hypergraph,
    complete_graph,
    cycle,
    disjoint_union,
    linear_triangle,
    path,
    simplex,
    validate_graph_morphism,
)
from hyperclust.motifs import (
    BudgetExceededError,
    acyclic_orientation_profile,
    embedding_count_bound,
    enumerate_embeddings,
    expansion_edge_sets,
    expansion_provenance,
    is_spanned,
    motif_expansion,
)

import oracles
from test_graphs import hypergraphs, simple_graphs


class TestEnumerate:
    def test_edge_into_triangle(self):
        found = enumerate_embeddings(complete_graph(2), complete_graph(3))
        assert len(found) == 6
        for emb in found:
            assert validate_graph_morphism(emb).ok

    def test_single_edge_motif_hits_every_edge_set_once_per_ordering(self):
        g = Hypergraph("ab", {"e1": "ab", "e2": "ab"})
        found = enumerate_embeddings(simplex(2), g)
        # parallel copies give one edge set, so two embeddings, not four
        assert len(found) == 2

    def test_order_is_deterministic(self):
        a = enumerate_embeddings(path(3), cycle(5))
        b = enumerate_embeddings(path(3), cycle(5))
        assert [m.map for m in a] == [m.map for m in b]
        keys = [tuple(m.map[v] for v in sorted(m.source.vertices)) for m in a]
        assert keys == sorted(keys)

    def test_no_embedding_when_edge_sizes_missing(self):
        assert enumerate_embeddings(simplex(3), complete_graph(4)) == []

    def test_budget_trips(self):
        with pytest.raises(BudgetExceededError) as err:
            enumerate_embeddings(path(3), complete_graph(6), budget=10)
        assert err.value.found >= 0

    @given(hypergraphs(max_vertices=3, max_edges=2, max_edge_size=3),
           hypergraphs(max_vertices=4, max_edges=3, max_edge_size=3))
    @settings(max_examples=60, deadline=None)
    def test_matches_naive_oracle(self, motif, graph):
        if not motif.vertices:
            return
        ours = [m.map for m in enumerate_embeddings(motif, graph)]
        naive = oracles.naive_embeddings(motif, graph)
        assert ours == naive


class TestExpansion:
    def test_expansion_of_triangle_along_edge(self):
        expanded = motif_expansion([complete_graph(2)], complete_graph(3))
        assert expanded.vertices == complete_graph(3).vertices
        assert len(expanded.edges) == 6
        assert expanded.edge_sets() == complete_graph(3).edge_sets()

    def test_edge_ids_carry_provenance(self):
        expanded = motif_expansion([complete_graph(2), path(3)], path(3))
        for edge_id, members in expanded.edges.items():
            index, mapping = expansion_provenance(edge_id)
            assert index in (0, 1)
            assert frozenset(mapping.values()) == members

    def test_provenance_rejects_foreign_ids(self):
        with pytest.raises(ValueError):
            expansion_provenance("e1")

    def test_empty_motif_list_gives_edgeless_expansion(self):
        expanded = motif_expansion([], complete_graph(3))
        assert expanded.edges == {}
        assert expanded.vertices == complete_graph(3).vertices

    def test_vertexless_motif_rejected(self):
        with pytest.raises(ValueError):
            motif_expansion([Hypergraph([])], complete_graph(2))

    def test_names_are_not_motifs(self):
        with pytest.raises(ValueError):
            motif_expansion(["K2"], complete_graph(2))

    def test_edge_sets_shortcut_agrees(self):
        motifs = [complete_graph(2), simplex(3)]
        g = linear_triangle()
        assert expansion_edge_sets(motifs, g) == motif_expansion(motifs, g).edge_sets()

    def test_single_edge_family_recovers_edge_sets(self):
        # expanding along one all-vertex edge of every present size keeps
        # exactly the distinct edge sets of the input
        g = Hypergraph("abcd", {"e1": "ab", "e2": "ab", "e3": "bcd"})
        motifs = [simplex(2), simplex(3)]
        assert expansion_edge_sets(motifs, g) == g.edge_sets()


class TestSpanned:
    def test_spanned(self):
        assert is_spanned(simplex(3))
        assert not is_spanned(path(3))
        assert not is_spanned(Hypergraph("ab"))


class TestOrientationProfile:
    def test_frozen_small_profiles(self):
        assert acyclic_orientation_profile(complete_graph(2)) == {1: 2}
        assert acyclic_orientation_profile(path(3)) == {1: 3, 2: 1}
        assert acyclic_orientation_profile(complete_graph(3)) == {1: 6}

    def test_isolated_vertices_are_always_sinks(self):
        g = Hypergraph("abc", {"e1": "ab"})
        assert acyclic_orientation_profile(g) == {2: 2}

    def test_simple_only(self):
        with pytest.raises(ValueError):
            acyclic_orientation_profile(simplex(3))

    @given(simple_graphs(max_vertices=4))
    @settings(max_examples=40, deadline=None)
    def test_matches_naive_oracle(self, g):
        assert acyclic_orientation_profile(g) == oracles.naive_acyclic_profile(g)


class TestCountBound:
    def test_frozen_values(self):
        assert embedding_count_bound(complete_graph(2), 1, 10) == 20
        assert embedding_count_bound(complete_graph(3), 2, 10) == 240
        assert embedding_count_bound(path(3), 1, 10) == 130

    def test_bound_dominates_on_small_hosts(self):
        for host in (complete_graph(5), cycle(6), disjoint_union(path(3), cycle(3))):
            from hyperclust.graphs import degeneracy

            d = degeneracy(host)[0]
            n = len(host.vertices)
            for motif in (complete_graph(2), path(3), complete_graph(3)):
                found = enumerate_embeddings(motif, host)
                assert len(found) <= embedding_count_bound(motif, d, n)
