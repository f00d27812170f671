"""Command-line interface: matrix / coeffs / apply / verify / bench.

Exit codes: 0 success, 1 verification failure, 2 argument or file error,
3 numerical warning threshold exceeded under --strict.
"""

import argparse
import contextlib
import sys
import warnings
from fractions import Fraction

import numpy as np

from . import _kernels, bench, formats, verify
from .engine import (
    RESIDUAL_WARN_LIMIT,
    IllConditionedWarning,
    apply,
    frft,
)
from .linalg import SingularMatrixError
from .spectrum import spectrum
from .vandermonde import (
    build_f_vector,
    build_vandermonde,
    invert_vandermonde_transpose,
    solve_coefficients,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_STRICT_WARNING = 3


def parse_order(text: str):
    """Order argument: decimal, or exact rational "p/q" kept as a Fraction."""
    tok = text.strip()
    try:
        if "/" in tok:
            num, den = tok.split("/", 1)
            frac = Fraction(int(num), int(den))
            return frac
        return float(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid order {text!r}: {exc}") from exc


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid size {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"size must be >= 1, got {value}")
    return value


def _order_label(order) -> str:
    if isinstance(order, Fraction):
        return f"{order.numerator}/{order.denominator}"
    return repr(float(order))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfrft",
        description="Fractional powers of the DFT matrix: compute, apply, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_order=True, need_size=True):
        p.add_argument("--order", type=parse_order, required=need_order,
                       help="transform order: decimal or rational p/q")
        p.add_argument("--size", type=_positive_int, required=need_size,
                       help="transform size N")
        p.add_argument("--method", choices=("projector", "vandermonde"),
                       default="projector", help="construction method")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", help="output path (default: stdout)")
        p.add_argument("--tolerance", type=float, default=1e-9)
        p.add_argument("--precision", type=int, default=formats.DEFAULT_DIGITS,
                       help="significant digits in text output")
        p.add_argument("--strict", action="store_true",
                       help="exit 3 when the solve residual exceeds "
                            f"{RESIDUAL_WARN_LIMIT:.0e}")

    p_matrix = sub.add_parser("matrix", help="write the order-alpha transform matrix")
    common(p_matrix)
    p_matrix.set_defaults(func=cmd_matrix)

    p_coeffs = sub.add_parser("coeffs", help="polynomial coefficients (and the "
                              "interpolation system on request)")
    common(p_coeffs)
    p_coeffs.add_argument("--show-vandermonde", action="store_true",
                          help="also emit the confluent Vandermonde matrix")
    p_coeffs.add_argument("--show-inverse", action="store_true",
                          help="also emit the explicit inverse of its transpose")
    p_coeffs.add_argument("--show-f", action="store_true",
                          help="also emit the interpolation right-hand side")
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_apply = sub.add_parser("apply", help="transform a signal file")
    common(p_apply, need_size=False)
    p_apply.add_argument("--input", required=True, help="signal file to transform")
    p_apply.set_defaults(func=cmd_apply)

    p_verify = sub.add_parser("verify", help="run the invariant suite")
    p_verify.add_argument("--size", type=_positive_int, default=None)
    p_verify.add_argument("--order", type=parse_order, default=None)
    p_verify.add_argument("--tolerance", type=float, default=1e-9)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time both methods and both apply paths")
    p_bench.add_argument("--sizes", type=_positive_int, nargs="+",
                         default=list(bench.DEFAULT_SIZES))
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.set_defaults(func=cmd_bench)

    return parser


@contextlib.contextmanager
def _open_output(path):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fp:
            yield fp
    else:
        yield sys.stdout


def _residual_exit(args, residual: float) -> int:
    if residual > RESIDUAL_WARN_LIMIT:
        print(
            f"warning: solve residual {residual:.3e} exceeds {RESIDUAL_WARN_LIMIT:.0e}",
            file=sys.stderr,
        )
        if args.strict:
            return EXIT_STRICT_WARNING
    return EXIT_OK


def cmd_matrix(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IllConditionedWarning)
        fmat = frft(args.order, args.size, method=args.method)
    print(
        f"method={fmat.method} size={fmat.size} order={_order_label(args.order)} "
        f"residual={fmat.solve_residual_inf:.3e} backend={_kernels.backend()}",
        file=sys.stderr,
    )
    with _open_output(args.output) as fp:
        if args.format == "json":
            formats.write_matrix_json(
                fp, fmat.matrix, order=args.order, method=fmat.method,
                residual=fmat.solve_residual_inf,
            )
        else:
            formats.write_matrix_csv(fp, fmat.matrix, digits=args.precision)
    return _residual_exit(args, fmat.solve_residual_inf)


def cmd_coeffs(args) -> int:
    coeffs = solve_coefficients(args.order, args.size)
    spec = spectrum(args.size)
    vmat = build_vandermonde(spec) if (args.show_vandermonde or args.show_inverse) else None
    label = _order_label(args.order)

    with _open_output(args.output) as fp:
        if args.format == "json":
            payload = {
                "order": float(args.order),
                "size": coeffs.size,
                "residual": coeffs.solve_residual_inf,
                "coefficients": [[z.real, z.imag] for z in coeffs.entries],
            }
            if isinstance(args.order, Fraction):
                payload["order_exact"] = label
            if args.show_vandermonde:
                payload["vandermonde"] = [[[z.real, z.imag] for z in row] for row in vmat]
            if args.show_inverse:
                inv = invert_vandermonde_transpose(vmat)
                payload["vandermonde_transpose_inverse"] = [
                    [[z.real, z.imag] for z in row] for row in inv
                ]
            if args.show_f:
                fvec = build_f_vector(args.order, spec)
                payload["f"] = [[z.real, z.imag] for z in fvec]
            import json

            json.dump(payload, fp)
            fp.write("\n")
        else:
            fp.write(
                f"# coefficients order={label} size={coeffs.size} "
                f"residual={coeffs.solve_residual_inf:.6e}\n"
            )
            formats.write_signal_csv(fp, coeffs.entries, digits=args.precision)
            if args.show_vandermonde:
                fp.write("# vandermonde\n")
                formats.write_matrix_csv(fp, vmat, digits=args.precision)
            if args.show_inverse:
                fp.write("# vandermonde-transpose-inverse\n")
                inv = invert_vandermonde_transpose(vmat)
                formats.write_matrix_csv(fp, inv, digits=args.precision)
            if args.show_f:
                fp.write("# f-vector\n")
                fvec = build_f_vector(args.order, spec)
                formats.write_signal_csv(fp, fvec, digits=args.precision)
    return _residual_exit(args, coeffs.solve_residual_inf)


def cmd_apply(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fp:
        if args.format == "json":
            signal = formats.read_signal_json(fp)
        else:
            signal = formats.read_signal_csv(fp)
    if args.size is not None and args.size != signal.shape[0]:
        print(
            f"error: signal length {signal.shape[0]} does not match --size {args.size}",
            file=sys.stderr,
        )
        return EXIT_BAD_INPUT

    n = signal.shape[0]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IllConditionedWarning)
        fmat = frft(args.order, n, method=args.method)
    out = apply(fmat, signal)

    norm_in = float(np.linalg.norm(signal))
    norm_out = float(np.linalg.norm(out))
    drift = abs(norm_out - norm_in)
    if drift > args.tolerance * max(1.0, norm_in):
        print(
            f"warning: 2-norm drifted by {drift:.3e} (tolerance {args.tolerance:.1e})",
            file=sys.stderr,
        )
        if args.strict:
            return EXIT_STRICT_WARNING

    with _open_output(args.output) as fp:
        if args.format == "json":
            formats.write_signal_json(fp, out)
        else:
            formats.write_signal_csv(fp, out, digits=args.precision)
    return _residual_exit(args, fmat.solve_residual_inf)


def cmd_verify(args) -> int:
    sizes = (args.size,) if args.size else None
    orders = (args.order,) if args.order is not None else None
    results = verify.run_suite(sizes=sizes, orders=orders, tolerance=args.tolerance)
    print(verify.format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def cmd_bench(args) -> int:
    print(bench.run_bench(sizes=tuple(args.sizes), repeats=args.repeats))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_BAD_INPUT
    try:
        return args.func(args)
    except (OSError, ValueError, SingularMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
