"""Exact q-series tools for universality of ternary polygonal-type sums."""

from .forms import (
    ExceptionalSet,
    SquareReduction,
    TernaryTuple,
    UniversalityScan,
    equivalent_components,
    equivalent_up_to,
    exceptional_set,
    is_universal_up_to,
    reduce_to_squares,
    rep_series,
)
from .identities import (
    IdentityRecord,
    check_dissection_counts,
    dissect_components,
    load_catalog,
    universality_transfer,
    verify_identity,
)
from .qseries import Series, SeriesOverflowError
from .theta import ThetaFactor, named_series, theta_series

__version__ = "0.1.0"

__all__ = [
    "ExceptionalSet",
    "IdentityRecord",
    "Series",
    "SeriesOverflowError",
    "SquareReduction",
    "TernaryTuple",
    "ThetaFactor",
    "UniversalityScan",
    "check_dissection_counts",
    "dissect_components",
    "equivalent_components",
    "equivalent_up_to",
    "exceptional_set",
    "is_universal_up_to",
    "load_catalog",
    "named_series",
    "reduce_to_squares",
    "rep_series",
    "theta_series",
    "universality_transfer",
    "verify_identity",
]
