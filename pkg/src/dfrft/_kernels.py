"""Hot numeric kernels in two flavours: numba-jitted loops and pure numpy.

The jitted kernels use a fixed left-to-right summation order, so repeated
runs produce bitwise-identical results.  The numpy fallback delegates to
BLAS-backed routines (deterministic on a given machine, but not guaranteed
bitwise-equal to the loop kernels).

Backend selection happens once at import time:

* numba is used when it imports cleanly and ``DFRFT_DISABLE_NUMBA`` is unset;
* otherwise the numpy implementations are used.

``matmul_numba`` / ``matmul_numpy`` (and friends) stay importable regardless
of the active backend so benchmarks can compare the two directly.
"""

import os

import numpy as np

DISABLE_ENV_VAR = "DFRFT_DISABLE_NUMBA"

# Pivots smaller than this fraction of the largest input entry are treated
# as singular-to-working-precision.
SINGULAR_PIVOT_RTOL = 1e-14

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
    njit = None
    _HAVE_NUMBA = False


def _env_disabled() -> bool:
    return os.environ.get(DISABLE_ENV_VAR, "").strip().lower() in {"1", "true", "yes", "on"}


# ---------------------------------------------------------------------------
# loop kernels (numba targets)
# ---------------------------------------------------------------------------

def _matmul_loops(a, b):
    n = a.shape[0]
    k = a.shape[1]
    m = b.shape[1]
    out = np.empty((n, m), np.complex128)
    for i in range(n):
        for j in range(m):
            acc = 0.0 + 0.0j
            for t in range(k):
                acc = acc + a[i, t] * b[t, j]
            out[i, j] = acc
    return out


def _matvec_loops(a, x):
    n = a.shape[0]
    m = a.shape[1]
    out = np.empty(n, np.complex128)
    for i in range(n):
        acc = 0.0 + 0.0j
        for t in range(m):
            acc = acc + a[i, t] * x[t]
        out[i] = acc
    return out


def _lu_solve_loops(a, b):
    """Row-pivoted Gaussian elimination; returns (x, status).

    status 0: solved; status 1: a pivot fell below the singularity threshold
    (the returned x is then meaningless).
    """
    n = a.shape[0]
    lu = a.copy()
    x = b.copy()
    amax = 0.0
    for i in range(n):
        for j in range(n):
            v = abs(lu[i, j])
            if v > amax:
                amax = v
    tol = SINGULAR_PIVOT_RTOL * amax
    for col in range(n):
        p = col
        best = abs(lu[col, col])
        for i in range(col + 1, n):
            v = abs(lu[i, col])
            if v > best:
                best = v
                p = i
        if best < tol or best == 0.0:
            return x, 1
        if p != col:
            for j in range(n):
                tmp = lu[col, j]
                lu[col, j] = lu[p, j]
                lu[p, j] = tmp
            tmpb = x[col]
            x[col] = x[p]
            x[p] = tmpb
        piv = lu[col, col]
        for i in range(col + 1, n):
            factor = lu[i, col] / piv
            if factor != 0:
                for j in range(col + 1, n):
                    lu[i, j] = lu[i, j] - factor * lu[col, j]
                x[i] = x[i] - factor * x[col]
            lu[i, col] = 0.0 + 0.0j
    for i in range(n - 1, -1, -1):
        acc = x[i]
        for j in range(i + 1, n):
            acc = acc - lu[i, j] * x[j]
        x[i] = acc / lu[i, i]
    return x, 0


# ---------------------------------------------------------------------------
# pure-numpy fallbacks
# ---------------------------------------------------------------------------

def matmul_numpy(a, b):
    return a @ b


def matvec_numpy(a, x):
    return a @ x


def lu_solve_numpy(a, b):
    """Same elimination as the loop kernel, vectorized over trailing rows."""
    n = a.shape[0]
    lu = a.copy()
    x = b.copy()
    amax = float(np.abs(lu).max()) if n else 0.0
    tol = SINGULAR_PIVOT_RTOL * amax
    for col in range(n):
        p = col + int(np.argmax(np.abs(lu[col:, col])))
        best = abs(lu[p, col])
        if best < tol or best == 0.0:
            return x, 1
        if p != col:
            lu[[col, p]] = lu[[p, col]]
            x[[col, p]] = x[[p, col]]
        factors = lu[col + 1:, col] / lu[col, col]
        lu[col + 1:, col + 1:] -= np.outer(factors, lu[col, col + 1:])
        x[col + 1:] -= factors * x[col]
        lu[col + 1:, col] = 0.0
    for i in range(n - 1, -1, -1):
        x[i] = (x[i] - np.dot(lu[i, i + 1:], x[i + 1:])) / lu[i, i]
    return x, 0


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------

if _HAVE_NUMBA:
    matmul_numba = njit(cache=True)(_matmul_loops)
    matvec_numba = njit(cache=True)(_matvec_loops)
    lu_solve_numba = njit(cache=True)(_lu_solve_loops)
else:  # pragma: no cover
    matmul_numba = None
    matvec_numba = None
    lu_solve_numba = None

if _HAVE_NUMBA and not _env_disabled():
    BACKEND = "numba"
    matmul_impl = matmul_numba
    matvec_impl = matvec_numba
    lu_solve_impl = lu_solve_numba
else:
    BACKEND = "numpy"
    matmul_impl = matmul_numpy
    matvec_impl = matvec_numpy
    lu_solve_impl = lu_solve_numpy


def backend() -> str:
    """Name of the active kernel backend, "numba" or "numpy"."""
    return BACKEND


def numba_available() -> bool:
    return _HAVE_NUMBA


def warmup() -> None:
    """Trigger JIT compilation so later calls (and timings) run hot."""
    a = np.eye(2, dtype=np.complex128)
    v = np.ones(2, dtype=np.complex128)
    matmul_impl(a, a)
    matvec_impl(a, v)
    lu_solve_impl(a, v)
