"""Multigraph toolkit: oddomorphisms, immersions, treewidth, homomorphism counts.

Thin convenience layer over the compiled core; counting results are plain
python ints of unbounded size.
"""

from oddmorph._core import (  # noqa: F401
    BudgetError,
    FormatError,
    GraphError,
    MultiGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    distinguish,
    exact_treewidth,
    extract_clique_immersion,
    find_immersion,
    path_graph,
    required_colours,
    search_oddomorphism,
    verify_immersion_json,
    verify_oddomorphism,
)
from oddmorph._core import hom_count_str as _hom_count_str
from oddmorph._core import __version__  # noqa: F401


def hom_count(source, target, method="td"):
    """Exact homomorphism count from source into target as a python int."""
    return int(_hom_count_str(source, target, method))
