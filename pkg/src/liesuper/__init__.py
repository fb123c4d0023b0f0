"""Schur multipliers, exterior products and capability of pairs of Lie superalgebras.

All arithmetic is exact over the rationals.  The main entry points are
:func:`multiplier_pair`, :func:`exterior_product_pair`, :func:`exterior_center`
and :func:`is_capable_pair`, which work for any nilpotent algebra built with
:class:`LieSuperalgebra` or one of the family constructors.
"""

from .core import (
    AlgebraFormatError,
    Element,
    GradedIdeal,
    LieSuperalgebra,
    NotAnIdealError,
    NotNilpotentError,
    Subspace,
    center,
    central_product,
    check_axioms,
    commutator,
    derived_subalgebra,
    direct_sum,
    from_json,
    load,
    nilpotency_class,
    quotient,
    to_json,
    whole,
)
from .families import (
    abelian,
    central_decomposition,
    classify_ideal,
    coordinate_ideals,
    heisenberg_even,
    heisenberg_odd,
    recognize_heisenberg,
)
from .freesuper import build_truncated, dims_petrogradsky, super_witt, witt
from .linalg import Q, SuperDim
from .pairs import (
    exterior_center,
    exterior_product_pair,
    is_capable_pair,
    multiplier,
    multiplier_central_ideal,
    multiplier_pair,
    multiplier_pair_basis,
    present,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraFormatError",
    "Element",
    "GradedIdeal",
    "LieSuperalgebra",
    "NotAnIdealError",
    "NotNilpotentError",
    "Q",
    "Subspace",
    "SuperDim",
    "abelian",
    "build_truncated",
    "center",
    "central_decomposition",
    "central_product",
    "check_axioms",
    "classify_ideal",
    "commutator",
    "coordinate_ideals",
    "derived_subalgebra",
    "dims_petrogradsky",
    "direct_sum",
    "exterior_center",
    "exterior_product_pair",
    "from_json",
    "heisenberg_even",
    "heisenberg_odd",
    "is_capable_pair",
    "load",
    "multiplier",
    "multiplier_central_ideal",
    "multiplier_pair",
    "multiplier_pair_basis",
    "nilpotency_class",
    "present",
    "quotient",
    "recognize_heisenberg",
    "super_witt",
    "to_json",
    "whole",
    "witt",
]
