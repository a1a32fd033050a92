"""Exact local-global invariants of diagonal quadratic forms over Q.

Hilbert symbols and square classes at every completion, Hasse-Witt vectors
and their top cup-product obstruction, local and global solvability with
certificates and witness search, and a finite groupoid model identifying a
descent 2-cocycle with a cup product of characters. All arithmetic is exact.
"""

from .cohomology import (
    BaseField,
    CohClass,
    RATIONALS,
    REALS,
    add,
    cohclass_from_json,
    cohclass_to_json,
    cup,
    h1,
    hilbert_symbol,
    is_zero,
    padic_class_rep,
    reciprocity_holds,
    two_adic_class,
    zero_class,
)
from .forms import (
    DegenerateFormError,
    DiagonalForm,
    SymmetricForm,
    diagonalize,
    discriminant,
    form_from_json,
    form_to_json,
    hasse_invariant,
    matrix_from_json,
    matrix_to_json,
)
from .hasse_witt import (
    MAX_RANK,
    FormalSymmetricPolynomial,
    HasseWittVector,
    hasse_witt_vector,
    obstruction_dim0,
    stabilization_pullback,
    top_obstruction,
    whitney_sum_check,
)
from .localsolve import InconclusivePrecisionError, default_precision, min_precision
from .rationals import (
    DEFAULT_FACTOR_BOUND,
    FactorizationLimitError,
    Place,
    REAL_PLACE,
    Rational,
    as_rational,
    factor,
    format_rational,
    is_prime,
    legendre_symbol,
    padic_valuation,
    squarefree_part,
    unit_part,
    unit_residue,
)
from .solvability import (
    DEFAULT_SEARCH_HEIGHT,
    SolvabilityCertificate,
    local_oracle,
    relevant_places,
    search_point,
    solvable_over_Q,
    solvable_over_Qp,
    solvable_over_R,
)

__all__ = [
    "BaseField",
    "CohClass",
    "DEFAULT_FACTOR_BOUND",
    "DEFAULT_SEARCH_HEIGHT",
    "DegenerateFormError",
    "DiagonalForm",
    "FactorizationLimitError",
    "FormalSymmetricPolynomial",
    "HasseWittVector",
    "InconclusivePrecisionError",
    "MAX_RANK",
    "Place",
    "RATIONALS",
    "REALS",
    "REAL_PLACE",
    "Rational",
    "SolvabilityCertificate",
    "SymmetricForm",
    "add",
    "as_rational",
    "cohclass_from_json",
    "cohclass_to_json",
    "cup",
    "default_precision",
    "diagonalize",
    "discriminant",
    "factor",
    "form_from_json",
    "form_to_json",
    "format_rational",
    "h1",
    "hasse_invariant",
    "hasse_witt_vector",
    "hilbert_symbol",
    "is_prime",
    "is_zero",
    "legendre_symbol",
    "local_oracle",
    "matrix_from_json",
    "matrix_to_json",
    "min_precision",
    "obstruction_dim0",
    "padic_class_rep",
    "padic_valuation",
    "reciprocity_holds",
    "relevant_places",
    "search_point",
    "solvable_over_Q",
    "solvable_over_Qp",
    "solvable_over_R",
    "squarefree_part",
    "stabilization_pullback",
    "top_obstruction",
    "two_adic_class",
    "unit_part",
    "unit_residue",
    "whitney_sum_check",
    "zero_class",
]
