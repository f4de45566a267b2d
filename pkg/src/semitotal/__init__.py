"""Semi-total and total graph colorings with alternating-path reductions.

The package builds colorings of simple connected graphs with max degree +
1 colors, measures how far they are from total and from equitable (the
beta and gamma statistics), and improves them by exchanging two colors
along maximal alternating paths or flipping same-colored-endpoints edges.
It ships a catalog of symmetric cubic and cage graphs with known cycle
patterns, covering-map lifts, perfect-code classification, an exact
small-instance solver, a CLI, and an HTTP session service for the browser
explorer.
"""

from .graph import Graph, GraphError, HamiltonDecomposition, build_graph, girth, max_degree, subgraph_components, verify_hamilton
from .coloring import (
    ClassListing,
    Coloring,
    ColoringError,
    apply_pattern,
    beta_edges,
    default_lacunar_stc,
    format_listing,
    greedy_stc,
    listing,
    validate,
)
from .families import (
    LcfNotation,
    fat_mobius,
    from_extended_lcf,
    from_lcf,
    generalized_petersen,
    haar,
    isomorphic,
    mobius_ladder,
    parse_lcf,
    prism,
    vertex_expand,
)
from .kempe import (
    Budget,
    KempeError,
    Mcap,
    ReductionStep,
    ReductionTrace,
    classify_step,
    enumerate_mcaps,
    flip_beta_edge,
    reduce,
    swap,
    trace_alternating,
)
from .covering import CoveringMap, lift_coloring, verify_covering
from .codes import classify_stc, edge_orthogonal, is_efficient_tc, is_perfect_code, is_total_perfect_code
from .oracle import closed_form, exact_total_chromatic, min_beta, min_gamma
from .catalog_io import CatalogEntry, catalog, catalog_keys

__version__ = "0.1.0"
