"""Six central parts of connected graphs.

Center, median and security center from hop distances; the characteristic
center from the Laplacian's Fiedler eigenspace; subgraph core and core
vertices from exact connected-subgraph counts.
"""

from .centers import center, centroid_tree, median, security_center, security_table
from .constructions import build_gch
from .counting import (
    CountMode,
    count_connected,
    core_vertices,
    eccentric_subgraph_number,
    subgraph_core,
    subgraph_number,
    tree_pair_count,
    tree_subtree_count,
)
from .generators import fixture_broom, fixture_gstar, generate
from .graph import Graph, parse_edge_list, serialize
from .metric import apsp, blocks, contained_in_some_block
from .report import PART_NAMES, compute_parts
from .spectral import (
    characteristic_center,
    characteristic_set_of_vector,
    characteristic_set_tree_perron,
    classify_fiedler_vector,
    fiedler_space,
    laplacian,
)

__all__ = [
    "PART_NAMES",
    "CountMode",
    "Graph",
    "apsp",
    "blocks",
    "build_gch",
    "center",
    "centroid_tree",
    "characteristic_center",
    "characteristic_set_of_vector",
    "characteristic_set_tree_perron",
    "classify_fiedler_vector",
    "compute_parts",
    "contained_in_some_block",
    "core_vertices",
    "count_connected",
    "eccentric_subgraph_number",
    "fiedler_space",
    "fixture_broom",
    "fixture_gstar",
    "generate",
    "laplacian",
    "median",
    "parse_edge_list",
    "security_center",
    "security_table",
    "serialize",
    "subgraph_core",
    "subgraph_number",
    "tree_pair_count",
    "tree_subtree_count",
]
