"""Timing harness behind ``dfrft bench``.

Times both construction methods and both signal paths per size, reports the
matmul/matvec counters that show the projector route costs a fixed number of
matrix products while the polynomial route needs N-1, and (when numba is
importable) compares the jitted kernels against the pure-numpy fallbacks on
the same inputs.
"""

import time
import warnings

import numpy as np

from . import _kernels, linalg
from .engine import IllConditionedWarning, apply, apply_fast, frft_projector, frft_vandermonde
from .linalg import SingularMatrixError
from .spectrum import dft_matrix

DEFAULT_SIZES = (8, 16, 32, 64, 128)


def _best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _fmt_ms(seconds) -> str:
    if seconds is None:
        return "n/a"
    return f"{seconds * 1e3:.3f}"


def run_bench(sizes=DEFAULT_SIZES, repeats: int = 3, rng_seed: int = 0) -> str:
    """Produce the benchmark report as a text table."""
    _kernels.warmup()
    rng = np.random.default_rng(rng_seed)
    lines = []
    lines.append("timings (ms, best of %d)" % repeats)
    lines.append(
        f"{'N':>5} {'vandermonde':>13} {'projector':>13} {'apply':>13} {'apply_fast':>13}"
    )
    counter_notes = []
    singular_sizes = []
    for n in sizes:
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        dft_matrix(n)  # prime the cache so timings exclude table construction
        reps = repeats if n <= 32 else 1

        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", IllConditionedWarning)
                t_vand = _best_of(lambda: frft_vandermonde(0.37, n), reps)
        except SingularMatrixError:
            t_vand = None
            singular_sizes.append(n)
        t_proj = _best_of(lambda: frft_projector(0.37, n), reps)
        fmat = frft_projector(0.37, n)
        t_apply = _best_of(lambda: apply(fmat, x), repeats)
        t_fast = _best_of(lambda: apply_fast(0.37, x), repeats)
        lines.append(
            f"{n:>5} {_fmt_ms(t_vand):>13} {_fmt_ms(t_proj):>13} "
            f"{_fmt_ms(t_apply):>13} {_fmt_ms(t_fast):>13}"
        )

        linalg.reset_op_counts()
        frft_projector(0.37, n)
        proj_mm = linalg.op_counts()["matmul"]
        vand_mm = None
        if t_vand is not None:
            linalg.reset_op_counts()
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", IllConditionedWarning)
                frft_vandermonde(0.37, n)
            vand_mm = linalg.op_counts()["matmul"]
        linalg.reset_op_counts()
        apply_fast(0.37, x)
        fast_mv = linalg.op_counts()["matvec"]
        counter_notes.append(
            f"{n:>5} {'n/a' if vand_mm is None else vand_mm:>13} "
            f"{proj_mm:>13} {fast_mv:>13}"
        )

    lines.append("")
    lines.append("operation counts per construction / apply_fast call")
    lines.append(f"{'N':>5} {'vand matmuls':>13} {'proj matmuls':>13} {'fast matvecs':>13}")
    lines.extend(counter_notes)

    if singular_sizes:
        lines.append("")
        lines.append(
            "note: vandermonde solve is singular to working precision at N in "
            f"{{{', '.join(str(n) for n in singular_sizes)}}} "
            "(factorial entry growth); no mitigation applied"
        )

    if _kernels.numba_available():
        lines.append("")
        lines.append("kernel backends (matmul ms, best of %d)" % repeats)
        lines.append(f"{'N':>5} {'numba':>13} {'numpy':>13}")
        for n in sizes:
            a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            b = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            t_nb = _best_of(lambda: _kernels.matmul_numba(a, b), repeats)
            t_np = _best_of(lambda: _kernels.matmul_numpy(a, b), repeats)
            lines.append(f"{n:>5} {_fmt_ms(t_nb):>13} {_fmt_ms(t_np):>13}")

    n = max(sizes)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    u = dft_matrix(n)
    t_fast = _best_of(lambda: apply_fast(0.37, x), 20)
    t_ref = _best_of(lambda: _three_matvec_reference(u, x), 20)
    lines.append("")
    lines.append(
        f"apply_fast at N={n}: {_fmt_ms(t_fast)} ms vs 3-matvec reference "
        f"{_fmt_ms(t_ref)} ms (ratio {t_fast / t_ref:.2f})"
    )
    return "\n".join(lines)


def _three_matvec_reference(u, x):
    """Cost floor for apply_fast: three products with U plus the combination."""
    v1 = _kernels.matvec_impl(u, x)
    v2 = _kernels.matvec_impl(u, v1)
    v3 = _kernels.matvec_impl(u, v2)
    return 0.25 * x + 0.25 * v1 + 0.25 * v2 + 0.25 * v3
