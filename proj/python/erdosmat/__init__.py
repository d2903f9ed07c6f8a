"""Exact verification, decomposition and enumeration of Erdos matrices.

Matrices are lists of rows of fractions.Fraction (ints and "p/q" strings are
accepted on input). Permutations are 1-based image lists.
"""

from ._core import (
    ArithmeticError,
    DependentSetError,
    DimensionError,
    Error,
    InternalError,
    NotBistochasticError,
    ParseError,
    RangeError,
    ReductionError,
    SingularMatrixError,
    Surd,
    build_gram,
    canonical_form,
    count_bound,
    decompose,
    delta,
    delta2_of_p,
    enumerate,
    frob_sq,
    half_identity_family,
    is_erdos,
    max_delta_matrix,
    maxtr,
    omega2,
    parse_matrix,
    pipeline,
    solve_candidate,
)

__version__ = "0.3.0"
