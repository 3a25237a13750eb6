from .relations import (
    relation_catalog, resolve_relation, successors, expand, interleave_hypothesis,
    HypothesisReport, fixed_by_all
)
from .products import (
    enumerate_mahavier, shift_forward_truncated, shift_two_sided_window, random_window, truncate, stitch,
    inverse_relation_word, forward_impression_sample, impression_coverage, csv_header, csv_row
)
from .structure import (
    interleave_T, interleave_order, phi_pair_to_window, conjugacy_S, split_S,
    exx2_apex_fiber, t_map_diagnostics
)
from .metrics import metric_dplus, metric_d2

__all__ = [
    # Relations
    "relation_catalog", "resolve_relation", "successors", "expand", "interleave_hypothesis",
    "HypothesisReport", "fixed_by_all",

    # Products and shifts
    "enumerate_mahavier", "shift_forward_truncated", "shift_two_sided_window", "random_window", "truncate", "stitch",
    "inverse_relation_word", "forward_impression_sample", "impression_coverage", "csv_header", "csv_row",

    # Structure maps
    "interleave_T", "interleave_order", "phi_pair_to_window", "conjugacy_S", "split_S",
    "exx2_apex_fiber", "t_map_diagnostics",

    # Metrics
    "metric_dplus", "metric_d2"
]
