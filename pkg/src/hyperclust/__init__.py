"""Overlapping clusterings of hypergraphs via motif expansion and overlap
components, plus machine checks for the structural properties the
constructions are supposed to have."""

from .graphs import (
    GraphMorphism,
    Hypergraph,
    SizeLimitError,
    Validation,
    build_named,
    compose_morphisms,
    corner_glued_pair,
    degeneracy,
    disjoint_union,
    edge_glued_chain,
    fused_triples,
    fused_triples_host,
    hypergraph_from_json,
    hypergraph_to_json,
    independence_number,
    iso_check,
    linear_triangle,
    restrict,
    validate_graph_morphism,
    validate_hypergraph,
)
from .partitions import (
    PartitionMorphism,
    PartitionedSet,
    clustering_from_json,
    clustering_to_json,
    is_non_overlapping,
    is_refinement,
    part_union,
    remove_spurious,
    validate_partition_morphism,
)
from .motifs import (
    BudgetExceededError,
    acyclic_orientation_profile,
    embedding_count_bound,
    enumerate_embeddings,
    expansion_edge_sets,
    is_spanned,
    motif_expansion,
)
from .components import (
    INFINITE,
    edge_set_parts,
    is_overlap_connected,
    line_graph,
    overlap_components,
)
from .schemes import (
    ComponentScheme,
    MotifScheme,
    SharedEdgeScheme,
    ToyScheme,
    cluster,
    scheme_from_json,
    scheme_to_json,
    shared_edge_graph,
    validate_shared_edge_motif,
)
from .checks import (
    CheckReport,
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
    validate_equal_parts_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CheckReport",
    "ComponentScheme",
    "Corpus",
    "CorpusBounds",
    "GraphMorphism",
    "Hypergraph",
    "INFINITE",
    "MotifScheme",
    "PartitionMorphism",
    "PartitionedSet",
    "SearchBounds",
    "SharedEdgeScheme",
    "SizeLimitError",
    "ToyScheme",
    "Validation",
    "acyclic_orientation_profile",
    "build_named",
    "check_excisive",
    "check_functorial",
    "check_refines",
    "check_scheme_equal",
    "cluster",
    "clustering_from_json",
    "clustering_to_json",
    "compose_morphisms",
    "connected_hull_check",
    "corner_glued_pair",
    "degeneracy",
    "disjoint_union",
    "edge_glued_chain",
    "edge_set_parts",
    "embedding_count_bound",
    "enumerate_embeddings",
    "expansion_edge_sets",
    "finite_rep_witness",
    "fused_triples",
    "fused_triples_host",
    "generate_corpus",
    "hull_check",
    "hypergraph_from_json",
    "hypergraph_to_json",
    "independence_number",
    "is_non_overlapping",
    "is_overlap_connected",
    "is_refinement",
    "is_spanned",
    "iso_check",
    "line_graph",
    "linear_triangle",
    "motif_expansion",
    "overlap_components",
    "part_union",
    "remove_spurious",
    "restrict",
    "scheme_from_json",
    "scheme_to_json",
    "search_equal_parts_example",
    "shared_edge_graph",
    "validate_equal_parts_witness",
    "validate_graph_morphism",
    "validate_hypergraph",
    "validate_partition_morphism",
    "validate_shared_edge_motif",
]
