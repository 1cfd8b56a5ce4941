"""Gallai 3-colourings of graphs: exact counts, estimates, experiments.

A Gallai colouring assigns one of three colours to every edge so that no
triangle shows all three colours. Counts are exact Python integers (they
reach 3^e quickly); estimates report in log base 3.
"""

from .checks import (
    ConcentrationReport,
    edge_concentration_check,
    lower_regime_check,
    triangle_tail_check,
)
from .counting import (
    BRUTEFORCE_EDGE_CAP,
    DEFAULT_NODE_CAP,
    Colouring,
    CountReport,
    construction_count,
    construction_enumerate,
    count_bruteforce,
    count_exact,
    gallai_weight,
    is_gallai,
    triangle_components,
)
from .errors import CapacityError, EdgeListParseError
from .estimate import KNUTH, NAIVE, LogEstimate, estimate_knuth, estimate_naive, pool
from .graph import (
    Graph,
    TriangleStats,
    expected_triangle_count,
    format_edge_list,
    generate_gnp,
    load_edge_list,
    parse_edge_list,
    save_edge_list,
    triangle_list,
    triangle_stats,
)
from .numerics import (
    LOG2_3,
    LOG3_2,
    binary_entropy,
    entropy_binomial_bound_check,
    log3_ratio,
)
from .rng import GENERATOR_ID
from .sweep import (
    SweepConfig,
    SweepRecord,
    emit_csv,
    load_sweep_config,
    parse_sweep_config,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTEFORCE_EDGE_CAP",
    "CapacityError",
    "Colouring",
    "ConcentrationReport",
    "CountReport",
    "DEFAULT_NODE_CAP",
    "EdgeListParseError",
    "GENERATOR_ID",
    "Graph",
    "KNUTH",
    "LOG2_3",
    "LOG3_2",
    "LogEstimate",
    "NAIVE",
    "SweepConfig",
    "SweepRecord",
    "TriangleStats",
    "binary_entropy",
    "construction_count",
    "construction_enumerate",
    "count_bruteforce",
    "count_exact",
    "edge_concentration_check",
    "emit_csv",
    "entropy_binomial_bound_check",
    "estimate_knuth",
    "estimate_naive",
    "expected_triangle_count",
    "format_edge_list",
    "gallai_weight",
    "generate_gnp",
    "is_gallai",
    "load_edge_list",
    "load_sweep_config",
    "log3_ratio",
    "lower_regime_check",
    "parse_edge_list",
    "parse_sweep_config",
    "pool",
    "run_sweep",
    "save_edge_list",
    "triangle_components",
    "triangle_list",
    "triangle_stats",
    "triangle_tail_check",
    "__version__",
]
