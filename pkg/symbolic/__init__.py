from .words import (
    word, shift_one_sided, shift_two_sided, concat, reverse_prefix,
    n_close, closeness_depth, enumerate_words
)

__all__ = [
    "word", "shift_one_sided", "shift_two_sided", "concat", "reverse_prefix",
    "n_close", "closeness_depth", "enumerate_words"
]
