"""Parking-function ideals and 1-skeleton ideals of rooted multigraphs."""

from .exact_matrix import (
    Block,
    build_block_join,
    build_uniform_offdiag,
    determinant,
    in_Gn,
    is_positive_semidefinite,
)
from .graph_enumeration import TUReport, parking_functions, spanning_trees_count, tu_enumerate
from .monomial_ideal import (
    MonomialIdeal,
    add_pure_power,
    colon_pure_power,
    contains,
    is_artinian,
    minimalize,
    std_count_enum,
    std_count_recursive,
    std_enumerate,
)
from .multigraph import (
    Multigraph,
    complete_multigraph,
    d_fold_product,
    d_S,
    degree,
    delete_rooted_edges,
    essential_components,
    laplacian_truncated,
    signless_laplacian_truncated,
)
from .skeleton_ideals import matrix_ideal, one_skeleton, parking_ideal, skeleton_ideal
from .verification import check_equality, classify_subgraph_of_Ka1, scan_family

__version__ = "0.1.0"
