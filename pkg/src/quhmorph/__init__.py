"""Skew-Hadamard morphisms of quaternary unit Hadamard matrices, in exact arithmetic."""

from .arithmetic import (
    NonexistenceVerdict,
    SplitType,
    density_scan,
    disc_K,
    emptiness_table,
    legendre,
    nonexistence_witness,
    split_type,
    squarefree_part,
    x3_emptiness,
)
from .constructions import QuhPair, fks_quh, paley_skew, quh_verify
from .errors import DimensionError, FormatError, ParameterError, QuhmorphError, ValidationError
from .finite_field import GfElement, GfField, field_new, jacobsthal, quadratic_character
from .matrix import (
    is_hadamard,
    is_skew_hadamard,
    kronecker,
    multiply,
    quartic_identity_check,
    skew_quadratic_check,
)
from .morphism import MorphismResult, apply_morphism, corollary_order, quartic_is_minimal
from .search import SearchOutcome, SearchStatus, exhaustive_search

__version__ = "0.1.0"
