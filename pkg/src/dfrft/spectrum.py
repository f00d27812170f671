"""The unitary DFT matrix and its eigenvalue structure.

The N-point DFT matrix U has entries ``exp(-2*pi*1j*j*k/N)/sqrt(N)`` (0-based
j, k; the classic textbook form indexes from 1 and writes (j-1)(k-1)).  Its
only eigenvalues are the fourth roots of unity; their multiplicities depend
solely on ``N mod 4``:

    N = 4m      ->  (m+1, m,   m,   m-1)
    N = 4m + 1  ->  (m+1, m,   m,   m)
    N = 4m + 2  ->  (m+1, m+1, m,   m)
    N = 4m + 3  ->  (m+1, m+1, m+1, m)

listed in the fixed eigenvalue order (+1, -1, -i, +i) used throughout the
package.  Zero-multiplicity eigenvalues are dropped from the active spectrum
so that multiplicities always sum to N.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Fixed eigenvalue order: +1, -1, -i, +i.
EIGENVALUE_ORDER = (1 + 0j, -1 + 0j, -1j, 1j)


@dataclass(frozen=True)
class EigenvalueSpectrum:
    """Active eigenvalues of the N-point DFT with their multiplicities.

    ``entries`` lists (eigenvalue, multiplicity) pairs in the fixed order
    (+1, -1, -i, +i), keeping only eigenvalues that actually occur.
    """

    size: int
    entries: tuple[tuple[complex, int], ...]

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"size must be >= 1, got {self.size}")
        total = 0
        for lam, mult in self.entries:
            if lam not in EIGENVALUE_ORDER:
                raise ValueError(f"{lam!r} is not a fourth root of unity")
            if mult < 1:
                raise ValueError("zero-multiplicity eigenvalue in active spectrum")
            total += mult
        if total != self.size:
            raise ValueError(f"multiplicities sum to {total}, expected {self.size}")

    @property
    def eigenvalues(self) -> tuple[complex, ...]:
        return tuple(lam for lam, _ in self.entries)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(mult for _, mult in self.entries)


def _check_size(n: int) -> int:
    n = int(n)
    if n < 1:
        raise ValueError(f"transform size must be >= 1, got {n}")
    return n


@lru_cache(maxsize=None)
def _dft_matrix_cached(n: int) -> np.ndarray:
    idx = np.arange(n)
    # reduce the exponent mod n before taking exp: keeps the phase argument
    # in [0, 2*pi) so large n does not lose accuracy to range reduction
    exponent = np.outer(idx, idx) % n
    mat = np.exp((-2j * np.pi / n) * exponent) / np.sqrt(n)
    mat.setflags(write=False)
    return mat


def dft_matrix(n: int) -> np.ndarray:
    """The unitary N-point DFT matrix (cached, returned read-only)."""
    return _dft_matrix_cached(_check_size(n))


def multiplicities(n: int) -> tuple[int, int, int, int]:
    """Eigenvalue multiplicities (m_+1, m_-1, m_-i, m_+i) for the N-point DFT."""
    n = _check_size(n)
    m, r = divmod(n, 4)
    if r == 0:
        return (m + 1, m, m, m - 1)
    if r == 1:
        return (m + 1, m, m, m)
    if r == 2:
        return (m + 1, m + 1, m, m)
    return (m + 1, m + 1, m + 1, m)


def spectrum(n: int) -> EigenvalueSpectrum:
    """Active (eigenvalue, multiplicity) pairs for the N-point DFT."""
    n = _check_size(n)
    entries = tuple(
        (lam, mult)
        for lam, mult in zip(EIGENVALUE_ORDER, multiplicities(n))
        if mult > 0
    )
    return EigenvalueSpectrum(size=n, entries=entries)
