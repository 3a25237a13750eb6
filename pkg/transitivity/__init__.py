from .skew import (
    skew_step, skew_inverse_step, skew_preimage, skew_orbit, system_for,
    inverse_limit_point, inverse_limit_readback, inverse_limit_shift, inverse_limit_unshift,
    product_shift, product_unshift, conjugate_sorting_step
)
from .transitive_point import (
    build_transitive_point, verify_transitive_point, auto_targets, eps_schedule,
    targets_from_cylinders, first_targets
)
from .sigma_chain import (
    build_sigma_chain, verify_sigma_chain, feasible_sets, target_depth, in_target, box_distance, auto_boxes
)
from .coverage import orbit_coverage, coverage_csv_rows, CSV_HEADER
from .targets import TargetSpec, TargetFile, load_targets

__all__ = [
    # Sorting skew products
    "skew_step", "skew_inverse_step", "skew_preimage", "skew_orbit", "system_for",

    # Inverse-limit conjugacy
    "inverse_limit_point", "inverse_limit_readback", "inverse_limit_shift", "inverse_limit_unshift",
    "product_shift", "product_unshift", "conjugate_sorting_step",

    # Transitive points
    "build_transitive_point", "verify_transitive_point", "auto_targets", "eps_schedule",
    "targets_from_cylinders", "first_targets",

    # Sigma chains
    "build_sigma_chain", "verify_sigma_chain", "feasible_sets", "target_depth", "in_target", "box_distance",
    "auto_boxes",

    # Coverage
    "orbit_coverage", "coverage_csv_rows", "CSV_HEADER",

    # Target files
    "TargetSpec", "TargetFile", "load_targets"
]
