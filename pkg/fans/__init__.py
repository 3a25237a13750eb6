from .quotient import (
    canonicalize, canonicalize_exx2, canonicalize_lelek, induced_map, check_compatible, apex_representatives
)
from .lelek import (
    lelek_endpoint_near, is_endpoint_certified, endpoint_depth, lelek_leg, random_lelek_window,
    sample_lelek_legs, relation_h
)
from .embedding import (
    cantor_points, embed_cantor_fan, choice_code, forward_choices, embed_lelek, lelek_legs,
    render_cantor, render_lelek, relation_graphs, render_relation,
    cantor_csv_rows, lelek_csv_rows, CSV_HEADER
)

__all__ = [
    # Quotient models
    "canonicalize", "canonicalize_exx2", "canonicalize_lelek", "induced_map", "check_compatible",
    "apex_representatives",

    # Lelek fan I_H
    "lelek_endpoint_near", "is_endpoint_certified", "endpoint_depth", "lelek_leg", "random_lelek_window",
    "sample_lelek_legs", "relation_h",

    # Embeddings and rendering
    "cantor_points", "embed_cantor_fan", "choice_code", "forward_choices", "embed_lelek", "lelek_legs",
    "render_cantor", "render_lelek", "relation_graphs", "render_relation",
    "cantor_csv_rows", "lelek_csv_rows", "CSV_HEADER"
]
