"""Competition numbers of small graphs, exactly.

Core objects: Graph/Digraph, edge clique covers (theta_E), realizations
(witness digraphs whose competition graph is the input plus isolated
vertices), closed-form bounds and the competitively-tight classifier. The
hot search kernels run compiled when the optional extension is built, with
a pure-Python fallback selected at import.
"""

from ._backend import active_name, compiled_available
from .cliques import CliqueCover, greedy_cover, maximal_cliques, theta_E, theta_E_restricted
from .errors import MalformedInputError, UnsupportedSizeError
from .families import (
    circulant,
    complete,
    complete_bipartite,
    cycle,
    edgeless,
    enumerate_graphs,
    g_tn,
    path,
    path_plus_clique,
)
from .fileio import read_digraph, read_edge_list, write_digraph, write_edge_list
from .graphs import (
    Digraph,
    EdgePartition,
    Graph,
    GraphStats,
    add_isolated,
    basic_stats,
    canonical_form,
    connected_components,
    cycle_vertices,
    edge_triangle_partition,
    from_edge_list,
    has_cycle_geq4,
    holes,
    is_chordal,
    is_connected,
    remove_edges,
    remove_vertex,
    triangles,
)
from .solver import (
    Realization,
    competition_graph,
    competition_number_exact,
    construct_main,
    construct_opsut,
    decide_k,
    is_acyclic,
    verify_realization,
)
from .tightness import (
    NEEDS_EXACT,
    NOT_TIGHT,
    TIGHT,
    BoundsReport,
    TightnessVerdict,
    bounds_report,
    classify_one_triangle,
    classify_two_triangle,
    is_competitively_tight,
    main_upper_bound,
    necessary_condition,
    opsut_bounds,
    reduce_preserving_tightness,
    sufficient_condition,
    triangle_free_k,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
