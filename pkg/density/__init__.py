from .convergents import LOG2, LOG3, THETA, continued_fraction_coeffs, continuants, convergents, residual
from .search import (
    search_pow23, search_pow23_log, exhaustive_pow23,
    search_half_pow, search_half_pow_log, exhaustive_half_pow,
    search_propertyL, search_propertyL_log, property_l_block,
    search_gabi, search_gabi_log, exhaustive_gabi, gabi_log, gabi_log_magnitude,
    target_log, SEARCHES
)
from .steering import F0, F1, SteeringWord, pair_log, run_pair_table, ranked_steering_words, steering_candidates

__all__ = [
    # Continued fractions
    "LOG2", "LOG3", "THETA", "continued_fraction_coeffs", "continuants", "convergents", "residual",

    # Witness searches
    "search_pow23", "search_pow23_log", "exhaustive_pow23",
    "search_half_pow", "search_half_pow_log", "exhaustive_half_pow",
    "search_propertyL", "search_propertyL_log", "property_l_block",
    "search_gabi", "search_gabi_log", "exhaustive_gabi", "gabi_log", "gabi_log_magnitude",
    "target_log", "SEARCHES",

    # Steering words on relation H
    "F0", "F1", "SteeringWord", "pair_log", "run_pair_table", "ranked_steering_words", "steering_candidates"
]
