from ._core import (
    GdeltaError,
    clausify,
    ground_clause_sat,
    ground_sat,
    ground_valid,
    prove,
    render_formula,
    replay,
    saturate,
)

__all__ = [
    "GdeltaError",
    "clausify",
    "ground_clause_sat",
    "ground_sat",
    "ground_valid",
    "prove",
    "render_formula",
    "replay",
    "saturate",
]
