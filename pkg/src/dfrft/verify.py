"""Invariant suite behind ``dfrft verify``.

Each property is evaluated over a grid of sizes and orders and reduced to its
worst residual.  Tolerances derive from one base tolerance (default 1e-9):
additivity and cross-method agreement get 10x slack, the exact-order identity
F_1 = U is held 1000x tighter.  Cross-method agreement for sizes above
AGREEMENT_EXACT_MAX_SIZE is judged against the reported solve residual
(<= 100x) instead of the absolute bound, since the confluent-Vandermonde
solve degrades quickly with size.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .engine import IllConditionedWarning, frft_projector, frft_vandermonde, real_power
from .linalg import SingularMatrixError
from .spectrum import dft_matrix

DEFAULT_SIZES = tuple(range(1, 13))
DEFAULT_ORDERS = (0.25, 0.5, Fraction(3, 7), 1.0, 1.9, -0.7)

# Largest size where the two construction methods must agree to the absolute
# tolerance; beyond it the vandermonde solve residual sets the scale.
AGREEMENT_EXACT_MAX_SIZE = 12

RESIDUAL_AGREEMENT_FACTOR = 100.0


@dataclass(frozen=True)
class PropertyResult:
    name: str
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def _max_entry(diff: np.ndarray) -> float:
    return float(np.abs(diff).max())


def _quiet_vandermonde(order, size):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IllConditionedWarning)
        return frft_vandermonde(order, size)


def run_suite(sizes=None, orders=None, tolerance: float = 1e-9) -> list[PropertyResult]:
    """Evaluate every property over the grid; returns one result per property."""
    sizes = tuple(sizes) if sizes else DEFAULT_SIZES
    orders = tuple(orders) if orders else DEFAULT_ORDERS
    results = []

    unitarity = 0.0
    dft_recovery = 0.0
    inverse = 0.0
    periodicity = 0.0
    additivity = 0.0
    agreement = 0.0

    for n in sizes:
        eye = np.eye(n)
        u = dft_matrix(n)
        projected = {}
        for alpha in orders:
            fp = frft_projector(alpha, n)
            projected[alpha] = fp.matrix
            unitarity = max(unitarity, _max_entry(fp.matrix @ fp.matrix.conj().T - eye))
            inverse = max(
                inverse, _max_entry(fp.matrix @ frft_projector(-alpha, n).matrix - eye)
            )
            periodicity = max(
                periodicity,
                _max_entry(frft_projector(float(alpha) + 4.0, n).matrix - fp.matrix),
            )
            try:
                fv = _quiet_vandermonde(alpha, n)
            except SingularMatrixError:
                agreement = float("inf")
                continue
            unitarity = max(unitarity, _max_entry(fv.matrix @ fv.matrix.conj().T - eye))
            gap = _max_entry(fv.matrix - fp.matrix)
            allowed = 10.0 * tolerance
            if n > AGREEMENT_EXACT_MAX_SIZE:
                allowed = max(allowed, RESIDUAL_AGREEMENT_FACTOR * fv.solve_residual_inf)
            agreement = max(agreement, gap / allowed)
        dft_recovery = max(dft_recovery, _max_entry(frft_projector(1.0, n).matrix - u))
        for alpha in orders:
            for beta in orders:
                combined = frft_projector(float(alpha) + float(beta), n).matrix
                additivity = max(
                    additivity,
                    _max_entry(projected[alpha] @ projected[beta] - combined),
                )

    results.append(PropertyResult("unitarity (both methods)", unitarity, tolerance))
    results.append(PropertyResult("order-1 recovers DFT", dft_recovery, tolerance / 1000.0))
    results.append(PropertyResult("inverse (F_a F_-a = I)", inverse, tolerance))
    results.append(PropertyResult("4-periodicity", periodicity, tolerance))
    results.append(PropertyResult("additivity", additivity, 10.0 * tolerance))
    # agreement is a ratio against its per-size bound, so the threshold is 1
    results.append(PropertyResult("method agreement (scaled)", agreement, 1.0))

    u7 = dft_matrix(7)
    power_u = _max_entry(real_power(Fraction(3, 7), Fraction(7, 3), 7).matrix - u7)
    power_id = _max_entry(real_power(Fraction(3, 7), Fraction(28, 3), 7).matrix - np.eye(7))
    results.append(PropertyResult("power roundtrip (3/7 -> DFT)", power_u, tolerance))
    results.append(PropertyResult("power roundtrip (3/7 -> identity)", power_id, tolerance))
    return results


def format_report(results: list[PropertyResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{r.name:<{width}}  max {r.max_residual:10.3e}  tol {r.tolerance:8.1e}  {status}"
        )
    return "\n".join(lines)
