"""Signed Gauss codes of one-component doodles and their skew-symmetric augmented matrices."""

from importlib import resources

from .gauss import (
    GaussCodeError,
    MoveKind,
    MoveSite,
    SignedGaussCode,
    apply_reduction_move,
    find_moves,
    insert_move,
    normalize,
    parse,
    random_code,
    serialize,
    virtualize,
)
from .homology import pairing_table, primitive_loops, tilde_table
from .skewmat import (
    AugSkewMatrix,
    Verdict,
    canonical_form,
    classify,
    matrix_of,
    reduce,
    s_equivalent,
)
from .surface import SurfaceSummary, is_planar, minimal_genus

__version__ = "0.1.0"


def load_kishino() -> SignedGaussCode:
    """The bundled flat Kishino code, crossings ``a1 .. a4``."""
    text = resources.files(__package__).joinpath("data/kishino.gauss").read_text()
    return parse(text)


__all__ = [
    "AugSkewMatrix",
    "GaussCodeError",
    "MoveKind",
    "MoveSite",
    "SignedGaussCode",
    "SurfaceSummary",
    "Verdict",
    "apply_reduction_move",
    "canonical_form",
    "classify",
    "find_moves",
    "insert_move",
    "is_planar",
    "load_kishino",
    "matrix_of",
    "minimal_genus",
    "normalize",
    "pairing_table",
    "parse",
    "primitive_loops",
    "random_code",
    "reduce",
    "s_equivalent",
    "serialize",
    "tilde_table",
    "virtualize",
]
