"""domkit: exact graph-domination toolkit.

Minimal and irreducible dominating sets, domination parameters, hypergraph
transversal machinery, lexicographic product structure, and recognition of
graphs whose minimal dominating sets all share one size.
"""

from .graphs import (
    Graph,
    GraphParseError,
    VertexSet,
    closed_neighborhood,
    complement,
    connected_components,
    enumerate_triangles,
    induced_subgraph,
    induces_c6_complement,
    is_complete,
    is_edgeless,
    isolated_vertices,
    neighborhood_of_set,
    open_neighborhood,
    parse_graph,
    write_graph,
)
from .hypergraphs import (
    Hypergraph,
    all_minimal_transversals_have_size,
    enumerate_minimal_transversals,
    is_minimal_transversal,
    is_transversal,
    minimal_transversals_up_to_size,
    parse_hypergraph,
    sperner_reduce,
    write_hypergraph,
)
from .domination import (
    DominationClassification,
    EnumerationCapExceeded,
    alpha,
    classify,
    enumerate_irreducible_dominating_sets,
    enumerate_minimal_dominating_sets,
    gamma,
    gamma_t,
    is_dominating,
    is_irreducible_dominating,
    is_irreducible_dominating_definitional,
    is_minimal_dominating,
    is_minimal_total_dominating,
    is_total_dominating,
    maximum_independent_set,
    minimum_dominating_set,
    minimum_total_dominating_set,
    neighborhood_hypergraph,
    private_closed_neighbors,
    upper_gamma,
)
from .lexicographic import (
    ProductGraph,
    ProductMinimalityReport,
    ProductSet,
    check_minimal_product,
    dominates_product_vertex,
    enumerate_minimal_dominating_sets_product,
    gamma_product,
    is_dominating_product,
    lex_product,
    project,
    upper_gamma_product_bound,
)
from .recognition import (
    RecognitionReport,
    is_well_covered_alpha2,
    is_well_dominated_bounded_k,
    is_well_dominated_enum,
    is_well_dominated_gamma2,
    is_well_dominated_lex,
    recognize,
)

__version__ = "0.1.0"
