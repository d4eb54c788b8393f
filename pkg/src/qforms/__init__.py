"""Exact decision procedures for diagonal quadratic forms.

Supported fields: ``F_p`` (p odd), ``Q``, ``R``, ``C`` and iterated Laurent
series fields over them.
"""

from .classify import (
    ValueSets,
    in_G,
    in_H,
    is_group,
    is_pfister_form,
    is_round,
    is_similar_to_pfister,
    represents,
    round_via_binary_multiples,
    value_sets,
)
from .errors import (
    BudgetExceededError,
    DegenerateFormError,
    FactoringBoundError,
    FieldMismatchError,
    ParseError,
    QFError,
    ResourceBoundError,
    UnsupportedFieldError,
)
from .fields import (
    FieldDescriptor,
    FieldElement,
    element,
    field_traits,
    is_square,
    parse_field,
    square_class,
    square_class_reps,
)
from .forms import QuadraticForm, diag, extend_form, hyperbolic_form, perp, pfister, scale, tensor
from .invariants import (
    REAL,
    InvariantRecord,
    Place,
    determinant_class,
    hasse_invariant,
    hilbert_symbol,
    invariant_record,
    is_isometric,
    is_similar,
    signature,
    split_hyperbolic,
)
from .isotropy import (
    WittDecomposition,
    anisotropic_part,
    is_hyperbolic,
    is_isotropic,
    springer_split,
    witt_decomposition,
    witt_index,
)

__version__ = "0.1.0"

__all__ = [
    "anisotropic_part",
    "BudgetExceededError",
    "DegenerateFormError",
    "determinant_class",
    "diag",
    "element",
    "extend_form",
    "FactoringBoundError",
    "field_traits",
    "FieldDescriptor",
    "FieldElement",
    "FieldMismatchError",
    "hasse_invariant",
    "hilbert_symbol",
    "hyperbolic_form",
    "in_G",
    "in_H",
    "invariant_record",
    "InvariantRecord",
    "is_group",
    "is_hyperbolic",
    "is_isometric",
    "is_isotropic",
    "is_pfister_form",
    "is_round",
    "is_similar",
    "is_similar_to_pfister",
    "is_square",
    "parse_field",
    "ParseError",
    "perp",
    "pfister",
    "Place",
    "QFError",
    "QuadraticForm",
    "REAL",
    "represents",
    "ResourceBoundError",
    "round_via_binary_multiples",
    "scale",
    "signature",
    "split_hyperbolic",
    "springer_split",
    "square_class",
    "square_class_reps",
    "tensor",
    "UnsupportedFieldError",
    "value_sets",
    "ValueSets",
    "witt_decomposition",
    "witt_index",
    "WittDecomposition",
]
