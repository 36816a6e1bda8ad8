"""Interval (gap-free) edge colorings of graph products.

Construct the five standard graph products, compose interval edge colorings
of products from colorings of their factors, verify interval colorings, and
cross-check everything against an exhaustive small-graph oracle.
"""

from .chromatic import (
    ChromaticIndexResult,
    bipartite_regular_coloring,
    exact_chromatic_index,
    regular_membership,
)
from .colorings import (
    EdgeColoring,
    GapViolation,
    IntervalReport,
    PropernessViolation,
    Spectrum,
    load_coloring,
    read_coloring,
    shift,
    spectrum,
    verify_interval,
    write_coloring,
)
from .constructions import (
    BoundReport,
    ConstructionInput,
    bound_report,
    cartesian_interval,
    lex_empty_interval,
    lex_regular_interval,
    prepare_input,
    strong_interval,
    strong_tensor_interval,
    tensor_interval,
    torus_hamming_membership,
)
from .dot import to_dot
from .errors import (
    BadDims,
    BadN,
    BadParameter,
    BudgetExceeded,
    ConstructionFailed,
    DuplicateEdge,
    EmptyFactor,
    GapfreeError,
    InvalidAlpha,
    LoopEdge,
    MissingParameter,
    NotBipartite,
    NotClass1,
    NotRegular,
    OutOfRange,
    VertexOutOfRange,
)
from .families import generate
from .graph import (
    DegreeProfile,
    Graph,
    build_graph,
    degree_profile,
    is_bipartite,
    read_edge_list,
    write_edge_list,
)
from .limits import DEFAULT_BUDGET
from .oracle import (
    CrossCheckReport,
    OracleResult,
    cross_validate,
    find_interval_coloring,
    naive_oracle,
    oracle,
    search_ceiling,
)
from .products import (
    EdgeOrigin,
    ProductGraph,
    ProductKind,
    product,
    read_provenance,
    write_provenance,
)

__all__ = [
    "BadDims",
    "BadN",
    "BadParameter",
    "BoundReport",
    "BudgetExceeded",
    "ChromaticIndexResult",
    "ConstructionFailed",
    "ConstructionInput",
    "CrossCheckReport",
    "DEFAULT_BUDGET",
    "DegreeProfile",
    "DuplicateEdge",
    "EdgeColoring",
    "EdgeOrigin",
    "EmptyFactor",
    "GapViolation",
    "GapfreeError",
    "Graph",
    "IntervalReport",
    "InvalidAlpha",
    "LoopEdge",
    "MissingParameter",
    "NotBipartite",
    "NotClass1",
    "NotRegular",
    "OracleResult",
    "OutOfRange",
    "ProductGraph",
    "ProductKind",
    "PropernessViolation",
    "Spectrum",
    "VertexOutOfRange",
    "bipartite_regular_coloring",
    "bound_report",
    "build_graph",
    "cartesian_interval",
    "cross_validate",
    "degree_profile",
    "exact_chromatic_index",
    "find_interval_coloring",
    "generate",
    "is_bipartite",
    "lex_empty_interval",
    "lex_regular_interval",
    "load_coloring",
    "naive_oracle",
    "oracle",
    "prepare_input",
    "product",
    "read_coloring",
    "read_edge_list",
    "read_provenance",
    "regular_membership",
    "search_ceiling",
    "shift",
    "spectrum",
    "strong_interval",
    "strong_tensor_interval",
    "tensor_interval",
    "to_dot",
    "torus_hamming_membership",
    "verify_interval",
    "write_coloring",
    "write_edge_list",
    "write_provenance",
]
