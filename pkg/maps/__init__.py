from .evaluation import (
    eval_map, injective, invert, compose_word, inverse_word_compose,
    log_eval, iterate_log, compose_runs_log, compose_word_log, run_lengths,
    safe_log, safe_exp
)
from .catalog import CATALOG, catalog, affine, power, scaled_power, piecewise, family
from .loader import FamilySpec, load_family, resolve_family

__all__ = [
    "eval_map", "injective", "invert", "compose_word", "inverse_word_compose",
    "log_eval", "iterate_log", "compose_runs_log", "compose_word_log", "run_lengths",
    "safe_log", "safe_exp",
    "CATALOG", "catalog", "affine", "power", "scaled_power", "piecewise", "family",
    "FamilySpec", "load_family", "resolve_family"
]
