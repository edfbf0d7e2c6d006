"""Unreduced symmetric tridiagonal matrices with a prescribed spectrum."""

from .errors import (
    ClusteredSpectrum,
    DegenerateRemainder,
    DimensionMismatch,
    DivideByZeroPoly,
    InputError,
    NonPositiveGamma,
    NotStrictlyIncreasing,
    NumericalBreakdown,
    ReducedMatrix,
    ResampleLimitExceeded,
    TridiagError,
    ZeroPolynomial,
)
from .householder import conjugate_diagonal, diag2trid, reflection_to_uniform, tridiagonalize
from .poly import Polynomial, derivative, divide_negated, evaluate, from_roots, leading_coefficient
from .schmeisser import SchmeisserSequence, build_t, naive_solve, schmeisser_sequence
from .tridiagonal import (
    EigenDecomposition,
    SymmetricTridiagonal,
    charpoly_bottom_up,
    charpoly_top_down,
    eigen_decomposition,
    eigenvalues,
    is_unreduced,
    sturm_count,
)

__version__ = "0.1.0"
