"""Exact k-tuple domination on co-biconvex graphs and web graphs."""

__version__ = "0.1.0"

from .cobiconvex import (  # noqa: E402
    AlphaPair,
    IntervalModel,
    alpha_pair,
    build_auxiliary_intervals,
    interval_mis,
    solve_cobiconvex,
    tuple_bound_pair,
)
from .errors import (  # noqa: E402
    BudgetExceeded,
    GraphFormatError,
    InputError,
    KTupleError,
    NotCoBiconvex,
    StructureViolation,
    UnsupportedK,
    WitnessNotConstructed,
)
from .graph import (  # noqa: E402
    Derivation,
    DominationResult,
    Graph,
    ZeroOneMatrix,
    augmented_adjacency,
    closed_neighborhood,
    connected_components,
    induced_subgraph,
    universal_vertices,
    verify_ktuple,
)
from .oracle import OracleBudget, oracle_c1p, oracle_interval_mis, oracle_min_ktuple  # noqa: E402
from .recognition import (  # noqa: E402
    CoBiconvexDecomposition,
    c0p_columns,
    c1p_columns,
    circ1p_columns,
    decompose_cobiconvex,
)
from .web import WebParams, algorithm1, class_partition_check, class_sequence, dom, web_graph  # noqa: E402
