"""Cover ideals of chordal graphs.

Minimal vertex covers, linear quotients orderings (shellings of independence
complexes) and graded Betti numbers, each computed two or more independent
ways.
"""

from .betti import (
    BettiTable,
    betti_from_ordering,
    betti_table,
    complete_graph_betti,
    graded_recursive,
    invariants,
    total_recursive,
    unmixed_1dim_betti,
)
from .chordal import (
    PivotRule,
    clique_complex_facets,
    elimination_ordering,
    is_chordal,
    simplicial_vertices,
    unmixed_certificate,
)
from .cli import parse_graph
from .covers import (
    independence_complex,
    induced_matching_number,
    minimal_covers_bruteforce,
    minimal_covers_recursive,
)
from .graph import Graph, induced_subgraph, is_clique, neighborhood
from .linquo import (
    colon_counts,
    fvt_ordering,
    shelling_from_ordering,
    verify_linear_quotients,
    verify_shelling,
    vv_ordering,
)
from .oracle import exhaustive_shelling_search, hochster_betti

__version__ = "0.1.0"
