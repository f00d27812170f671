"""Confluent Vandermonde systems for fractional powers of the DFT.

A function of a matrix with repeated eigenvalues can be written as a degree
N-1 polynomial whose coefficients solve a Hermite interpolation problem: the
polynomial must match the function value at every eigenvalue and, for an
eigenvalue of multiplicity m, the first m-1 derivatives as well.  Stacking
those conditions gives the transposed confluent Vandermonde system

    V^T c = f

where column block i of V holds d^{j-1} lambda^{k-1} / d lambda^{j-1}
evaluated at eigenvalue i (row k = 1..N, derivative order j-1 = 0..m_i-1) and
f holds the matching derivatives of lambda^alpha.  Fractional powers on the
unit circle use the principal branch Arg in (-pi, pi].
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .spectrum import EigenvalueSpectrum, spectrum

# i**t for t = 0..3; integer powers of the fourth roots are looked up here so
# they stay exact instead of round-tripping through exp/log.
_ROOT_CYCLE = (1 + 0j, 1j, -1 + 0j, -1j)
_ROOT_INDEX = {1 + 0j: 0, 1j: 1, -1 + 0j: 2, -1j: 3}

_UNIT_CIRCLE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Polynomial coefficients c with sum(c[n] * U**n) realizing order alpha.

    ``solve_residual_inf`` is the recomputed max|V^T c - f| of the linear
    solve that produced the coefficients; it is reported, not assumed small.
    """

    order: float | Fraction
    size: int
    entries: np.ndarray
    solve_residual_inf: float


def falling_factorial(x, k: int) -> float:
    """x * (x-1) * ... * (x-k+1); empty product (k=0) is 1."""
    if k < 0:
        raise ValueError(f"derivative order must be >= 0, got {k}")
    out = 1.0
    for t in range(k):
        out *= x - t
    return out


def _exact_root_power(lam: complex, exponent: int) -> complex:
    return _ROOT_CYCLE[(_ROOT_INDEX[lam] * exponent) % 4]


def principal_power(lam, alpha) -> complex:
    """lam**alpha on the unit circle via the principal branch.

    Computes ``exp(1j * alpha * Arg(lam))`` with Arg in (-pi, pi], so e.g.
    (-1)**0.5 = +1j and (-1j)**0.5 = exp(-1j*pi/4).  Integer exponents of the
    exact fourth roots of unity short-circuit to table lookups and are exact.
    """
    lam = complex(lam)
    if lam == 0:
        raise ValueError("0 has no power on the principal branch")
    if abs(abs(lam) - 1.0) > _UNIT_CIRCLE_TOL:
        raise ValueError(f"{lam!r} is not on the unit circle")
    a = float(alpha)
    if a == 0.0:
        return 1 + 0j
    if a == 1.0:
        return lam
    if a.is_integer() and lam in _ROOT_INDEX:
        return _exact_root_power(lam, int(a))
    return cmath.exp(1j * a * cmath.phase(lam))


def power_derivative(lam, alpha, order_d: int) -> complex:
    """order_d-th derivative of x**alpha evaluated at lam (unit circle).

    Closed form: falling_factorial(alpha, order_d) * lam**(alpha - order_d),
    never numerical differentiation.  order_d = 0 reduces to principal_power.
    """
    if order_d < 0:
        raise ValueError(f"derivative order must be >= 0, got {order_d}")
    a = float(alpha)
    coeff = falling_factorial(a, order_d)
    if coeff == 0.0:
        return 0j
    return coeff * principal_power(lam, a - order_d)


def build_vandermonde(spec: EigenvalueSpectrum) -> np.ndarray:
    """N x N confluent Vandermonde matrix for the given DFT spectrum.

    Column block i has width m_i; within it, column j holds the (j-1)-th
    derivative of lambda**(k-1) at eigenvalue i, for rows k = 1..N.  All
    entries are integer multiples of fourth roots of unity and are exact.
    """
    n = spec.size
    total = sum(spec.multiplicities)
    if total != n:
        raise ValueError(f"multiplicities sum to {total}, expected {n}")
    mat = np.zeros((n, n), dtype=np.complex128)
    col = 0
    for lam, mult in spec.entries:
        for d in range(mult):
            for k in range(n):
                coeff = math.perm(k, d)
                if coeff:
                    mat[k, col] = coeff * _exact_root_power(lam, k - d)
            col += 1
    return mat


def build_f_vector(alpha, spec: EigenvalueSpectrum) -> np.ndarray:
    """Blocked right-hand side: block i holds the first m_i derivatives of
    x**alpha at eigenvalue i (derivative order 0..m_i-1)."""
    entries = []
    for lam, mult in spec.entries:
        for d in range(mult):
            entries.append(power_derivative(lam, alpha, d))
    return np.array(entries, dtype=np.complex128)


def solve_coefficients(alpha, n: int) -> CoefficientVector:
    """Coefficients of the unique degree N-1 polynomial interpolating
    x**alpha (values and derivatives) on the DFT spectrum.

    Solves V^T c = f by a pivoted solve; the explicit inverse is never
    formed.  The solve residual is recomputed and carried on the result.
    """
    spec = spectrum(n)
    vmat = build_vandermonde(spec)
    fvec = build_f_vector(alpha, spec)
    c, residual = linalg.solve_linear(vmat.T, fvec)
    return CoefficientVector(
        order=alpha, size=spec.size, entries=c, solve_residual_inf=residual
    )


def invert_vandermonde_transpose(vmat: np.ndarray) -> np.ndarray:
    """Explicit inverse of V^T, built from N solves against basis vectors.

    Diagnostic path only; production code keeps to :func:`solve_coefficients`.
    """
    vt = linalg.as_matrix(vmat).T
    n = vt.shape[0]
    if vt.shape[0] != vt.shape[1]:
        raise ValueError(f"expected a square matrix, got {vmat.shape}")
    inv = np.empty((n, n), dtype=np.complex128)
    basis = np.zeros(n, dtype=np.complex128)
    for j in range(n):
        basis[:] = 0
        basis[j] = 1
        inv[:, j], _ = linalg.solve_linear(vt, basis)
    return inv
