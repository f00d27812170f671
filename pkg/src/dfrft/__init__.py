"""Discrete fractional Fourier transform via matrix polynomials of the DFT."""

from ._kernels import backend, numba_available
from .engine import (
    FrftMatrix,
    IllConditionedWarning,
    RESIDUAL_WARN_LIMIT,
    apply,
    apply_fast,
    frft,
    frft_projector,
    frft_vandermonde,
    real_power,
    spectral_projector,
)
from .linalg import (
    SingularMatrixError,
    adjoint,
    approx_eq,
    matmul,
    matvec,
    norm_inf,
    norm_max_entry,
    op_counts,
    reset_op_counts,
    solve_linear,
)
from .spectrum import EigenvalueSpectrum, dft_matrix, multiplicities, spectrum
from .vandermonde import (
    CoefficientVector,
    build_f_vector,
    build_vandermonde,
    falling_factorial,
    invert_vandermonde_transpose,
    power_derivative,
    principal_power,
    solve_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientVector",
    "EigenvalueSpectrum",
    "FrftMatrix",
    "IllConditionedWarning",
    "RESIDUAL_WARN_LIMIT",
    "SingularMatrixError",
    "adjoint",
    "apply",
    "apply_fast",
    "approx_eq",
    "backend",
    "build_f_vector",
    "build_vandermonde",
    "dft_matrix",
    "falling_factorial",
    "frft",
    "frft_projector",
    "frft_vandermonde",
    "invert_vandermonde_transpose",
    "matmul",
    "matvec",
    "multiplicities",
    "norm_inf",
    "norm_max_entry",
    "numba_available",
    "op_counts",
    "power_derivative",
    "principal_power",
    "real_power",
    "reset_op_counts",
    "solve_coefficients",
    "solve_linear",
    "spectral_projector",
    "spectrum",
]
