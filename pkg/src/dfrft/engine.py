"""Fractional powers of the DFT matrix and signal application.

Two construction routes are provided:

* ``vandermonde`` — the matrix-polynomial route: solve the transposed
  confluent Vandermonde system for coefficients c, then evaluate
  sum(c[n] * U**n) by Horner's scheme (N-1 matrix products).
* ``projector`` — the spectral route (default): since U is unitary with at
  most four distinct eigenvalues, F_alpha = sum_i lambda_i**alpha * P_i where
  the P_i are Lagrange polynomials in U of degree <= 3.  Costs at most two
  matrix products (U^2, U^3) regardless of N and involves no linear solve.

The two agree up to rounding; the vandermonde route additionally reports its
solve residual, and warns once that residual passes ``RESIDUAL_WARN_LIMIT``
(the confluent system becomes badly conditioned as N grows).
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .spectrum import dft_matrix, spectrum
from .vandermonde import principal_power, solve_coefficients

# Vandermonde solve residuals above this mark the result as ill-conditioned.
RESIDUAL_WARN_LIMIT = 1e-8

METHODS = ("projector", "vandermonde")


class IllConditionedWarning(UserWarning):
    """The coefficient solve residual exceeded RESIDUAL_WARN_LIMIT."""


@dataclass(frozen=True, eq=False)
class FrftMatrix:
    """An order-alpha fractional DFT matrix plus provenance.

    ``solve_residual_inf`` is the coefficient-solve residual for the
    vandermonde method and 0.0 for the projector method.
    """

    order: float | Fraction
    size: int
    matrix: np.ndarray
    method: str
    solve_residual_inf: float


def _freeze(mat: np.ndarray) -> np.ndarray:
    mat.setflags(write=False)
    return mat


def _lagrange_basis(eigs: tuple[complex, ...]) -> np.ndarray:
    """Row i: ascending coefficients of the polynomial that is 1 at eigs[i]
    and 0 at the other active eigenvalues."""
    n = len(eigs)
    basis = np.zeros((n, n), dtype=np.complex128)
    for i, li in enumerate(eigs):
        num = np.array([1.0 + 0j])
        den = 1.0 + 0j
        for j, lj in enumerate(eigs):
            if j == i:
                continue
            num = np.convolve(num, np.array([-lj, 1.0 + 0j]))
            den *= li - lj
        basis[i, : num.size] = num / den
    return basis


def _poly_of_dft(coeffs: np.ndarray, n: int) -> np.ndarray:
    """sum_k coeffs[k] * U**k via the short power chain U, U^2, ..."""
    u = dft_matrix(n)
    out = np.zeros((n, n), dtype=np.complex128)
    out.flat[:: n + 1] = coeffs[0]
    power = None
    for k in range(1, len(coeffs)):
        power = u if k == 1 else linalg.matmul(power, u)
        out += coeffs[k] * power
    return out


def _eigen_weights(alpha, eigs: tuple[complex, ...]) -> np.ndarray:
    return np.array([principal_power(lam, alpha) for lam in eigs])


def _from_eigen_weights(weights: np.ndarray, n: int) -> np.ndarray:
    eigs = spectrum(n).eigenvalues
    coeffs = weights @ _lagrange_basis(eigs)
    return _poly_of_dft(coeffs, n)


def frft_projector(alpha, n: int) -> FrftMatrix:
    """Order-alpha fractional DFT by spectral reconstruction (the default)."""
    eigs = spectrum(n).eigenvalues
    weights = _eigen_weights(alpha, eigs)
    mat = _from_eigen_weights(weights, n)
    return FrftMatrix(
        order=alpha, size=n, matrix=_freeze(mat), method="projector",
        solve_residual_inf=0.0,
    )


def frft_vandermonde(alpha, n: int) -> FrftMatrix:
    """Order-alpha fractional DFT as an explicit matrix polynomial in U.

    Horner evaluation, highest coefficient first: exactly N-1 matrix
    products.  Returns the matrix even when ill-conditioned, flagging it
    with an IllConditionedWarning and the recorded residual.
    """
    coeffs = solve_coefficients(alpha, n)
    c = coeffs.entries
    u = dft_matrix(n)
    mat = np.zeros((n, n), dtype=np.complex128)
    mat.flat[:: n + 1] = c[n - 1]
    for k in range(n - 2, -1, -1):
        mat = linalg.matmul(mat, u)
        mat.flat[:: n + 1] += c[k]
    if coeffs.solve_residual_inf > RESIDUAL_WARN_LIMIT:
        warnings.warn(
            f"coefficient solve residual {coeffs.solve_residual_inf:.3e} exceeds "
            f"{RESIDUAL_WARN_LIMIT:.0e} at size {n}; result may be inaccurate",
            IllConditionedWarning,
            stacklevel=2,
        )
    return FrftMatrix(
        order=alpha, size=n, matrix=_freeze(mat), method="vandermonde",
        solve_residual_inf=coeffs.solve_residual_inf,
    )


def frft(alpha, n: int, method: str = "projector") -> FrftMatrix:
    """Order-alpha fractional DFT by the chosen method."""
    if method == "projector":
        return frft_projector(alpha, n)
    if method == "vandermonde":
        return frft_vandermonde(alpha, n)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def spectral_projector(index: int, n: int) -> np.ndarray:
    """Orthogonal projector onto the eigenspace of the index-th active
    eigenvalue (0-based, in the fixed +1, -1, -i, +i order)."""
    eigs = spectrum(n).eigenvalues
    if not 0 <= index < len(eigs):
        raise IndexError(
            f"eigenvalue index {index} out of range for size {n} "
            f"({len(eigs)} active eigenvalues)"
        )
    coeffs = _lagrange_basis(eigs)[index]
    return _freeze(_poly_of_dft(coeffs, n))


def real_power(alpha, s, n: int) -> FrftMatrix:
    """The s-th real power of the order-alpha fractional DFT.

    Defined spectrally: each eigenvalue factor lambda**alpha is taken to the
    power s on the principal branch (its argument re-principalized first), so
    (F_{3/7})**(7/3) recovers U itself and (F_{3/7})**(28/3) the identity.
    Whenever |alpha| <= 1 this coincides with the order s*alpha transform.
    """
    eigs = spectrum(n).eigenvalues
    inner = _eigen_weights(alpha, eigs)
    weights = np.array([principal_power(w, s) for w in inner])
    mat = _from_eigen_weights(weights, n)
    return FrftMatrix(
        order=float(alpha) * float(s), size=n, matrix=_freeze(mat),
        method="projector", solve_residual_inf=0.0,
    )


def apply(fmat: FrftMatrix, x) -> np.ndarray:
    """Transform a signal with a precomputed fractional DFT matrix."""
    x = linalg.as_vector(x)
    if x.shape[0] != fmat.size:
        raise ValueError(
            f"signal length {x.shape[0]} does not match transform size {fmat.size}"
        )
    return linalg.matvec(fmat.matrix, x)


def apply_fast(alpha, x) -> np.ndarray:
    """Order-alpha transform of a signal without materializing the matrix.

    Uses y = sum_k beta_k U^k x with k < 4, i.e. at most three products with
    U, where beta combines the eigenvalue powers with the Lagrange basis.
    """
    x = linalg.as_vector(x)
    n = x.shape[0]
    if n < 1:
        raise ValueError("empty signal")
    eigs = spectrum(n).eigenvalues
    weights = _eigen_weights(alpha, eigs)
    coeffs = weights @ _lagrange_basis(eigs)
    u = dft_matrix(n)
    out = coeffs[0] * x
    vec = x
    for k in range(1, len(coeffs)):
        vec = linalg.matvec(u, vec)
        out = out + coeffs[k] * vec
    return out
