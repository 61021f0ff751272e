"""Finite Jaco graphs J_n(1): construction, degree tables, and edge counts
computed by four mutually cross-checking methods."""

from .fisher import (
    CSV_HEADER,
    FisherRow,
    TableState,
    edge_count_prefix,
    edges_recursive,
    fisher_table,
    next_row,
    rows_to_csv,
    seed_rows,
)
from .oracle import (
    DegreeRecord,
    HopeView,
    JacoGraph,
    Jaconian,
    arc_exists,
    build_jaco,
    degree_profile,
    edge_count_oracle,
    hope_view,
    jaconian,
    to_dot,
    to_edge_list,
)
from .reconstruction import (
    Anchor,
    BridgingSum,
    ExpressibilityError,
    bridging_terms,
    edges_from_anchor,
    edges_reconstruction,
    expressible_anchor,
)
from .zeckendorf import (
    Zeckendorf,
    bettina_out_degree,
    edges_zeckendorf,
    fib,
    format_decomposition,
    in_degree_bettina,
    zeckendorf_decompose,
    zeckendorf_value,
)

__version__ = "0.1.0"

__all__ = [
    "Anchor",
    "BridgingSum",
    "CSV_HEADER",
    "DegreeRecord",
    "ExpressibilityError",
    "FisherRow",
    "HopeView",
    "JacoGraph",
    "Jaconian",
    "TableState",
    "Zeckendorf",
    "arc_exists",
    "bettina_out_degree",
    "bridging_terms",
    "build_jaco",
    "degree_profile",
    "edge_count_oracle",
    "edge_count_prefix",
    "edges_from_anchor",
    "edges_recursive",
    "edges_reconstruction",
    "edges_zeckendorf",
    "expressible_anchor",
    "fib",
    "fisher_table",
    "format_decomposition",
    "hope_view",
    "in_degree_bettina",
    "jaconian",
    "next_row",
    "rows_to_csv",
    "seed_rows",
    "to_dot",
    "to_edge_list",
    "zeckendorf_decompose",
    "zeckendorf_value",
]
