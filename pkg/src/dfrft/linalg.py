"""Dense complex matrix/vector arithmetic shared by the whole package.

All public operations validate shapes and reject non-finite entries,
route the heavy lifting through the active kernel backend, and bump
per-operation counters (see :func:`op_counts`) so callers can assert how many
N-sized products a given algorithm performed.
"""

import numpy as np

from . import _kernels


class SingularMatrixError(ValueError):
    """Raised when elimination meets a pivot that is zero to working precision."""


_op_counts = {"matmul": 0, "matvec": 0, "solve": 0}


def reset_op_counts() -> None:
    for key in _op_counts:
        _op_counts[key] = 0


def op_counts() -> dict:
    """Snapshot of how many matmul/matvec/solve calls ran since the last reset."""
    return dict(_op_counts)


def as_matrix(a) -> np.ndarray:
    """Coerce to a contiguous complex128 2-D array, rejecting non-finite entries."""
    arr = np.ascontiguousarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    if not np.isfinite(arr).all():
        raise ValueError("matrix contains non-finite entries")
    return arr


def as_vector(x) -> np.ndarray:
    """Coerce to a contiguous complex128 1-D array, rejecting non-finite entries."""
    arr = np.ascontiguousarray(x, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got ndim={arr.ndim}")
    if not np.isfinite(arr).all():
        raise ValueError("vector contains non-finite entries")
    return arr


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    _op_counts["matmul"] += 1
    return _kernels.matmul_impl(a, b)


def matvec(a, x) -> np.ndarray:
    a = as_matrix(a)
    x = as_vector(x)
    if a.shape[1] != x.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ ({x.shape[0]},)")
    _op_counts["matvec"] += 1
    return _kernels.matvec_impl(a, x)


def solve_linear(a, rhs) -> tuple[np.ndarray, float]:
    """Solve a·x = rhs by row-pivoted elimination.

    Returns (x, residual) where residual is the recomputed ``max|a·x - rhs|``.
    Never forms an explicit inverse.

    Raises
    ------
    SingularMatrixError
        if a pivot falls below ``1e-14 * max|a|``.
    """
    a = as_matrix(a)
    rhs = as_vector(rhs)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"solve needs a square matrix, got {a.shape}")
    if a.shape[0] != rhs.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} vs rhs ({rhs.shape[0]},)")
    _op_counts["solve"] += 1
    x, status = _kernels.lu_solve_impl(a, rhs)
    if status != 0:
        raise SingularMatrixError("matrix is singular to working precision")
    residual = float(np.abs(_kernels.matvec_impl(a, x) - rhs).max()) if a.shape[0] else 0.0
    return x, residual


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return np.ascontiguousarray(as_matrix(a).conj().T)


def norm_inf(a) -> float:
    """Max row-sum norm for matrices, max modulus for vectors."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim == 1:
        return float(np.abs(arr).max()) if arr.size else 0.0
    if arr.ndim == 2:
        return float(np.abs(arr).sum(axis=1).max()) if arr.size else 0.0
    raise ValueError(f"norm_inf expects 1-D or 2-D input, got ndim={arr.ndim}")


def norm_max_entry(a) -> float:
    """Largest entry modulus."""
    arr = np.asarray(a, dtype=np.complex128)
    return float(np.abs(arr).max()) if arr.size else 0.0


def approx_eq(a, b, tol: float) -> bool:
    """Entrywise comparison: max|a - b| <= tol.  Shapes must match exactly."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return True
    return bool(np.abs(a - b).max() <= tol)
