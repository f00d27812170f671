"""CSV and JSON serialization for complex matrices and signals.

Matrix CSV: N rows by N columns, each cell one token ``a+bi`` / ``a-bi``
rendered with a configurable number of significant digits.  Signal CSV:
``index,re,im`` columns under a header line.  JSON carries matrices as an
object with order/size/method/residual metadata and ``entries`` as nested
``[re, im]`` pairs.  All text is UTF-8 with LF line endings.
"""

import json
from fractions import Fraction

import numpy as np

DEFAULT_DIGITS = 12

SIGNAL_HEADER = "index,re,im"


def format_complex(z, digits: int = DEFAULT_DIGITS) -> str:
    """Render one complex number as ``a+bi`` / ``a-bi``."""
    z = complex(z)
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real:.{digits}g}{sign}{abs(z.imag):.{digits}g}i"


def parse_complex(token: str) -> complex:
    """Parse ``a+bi`` tokens (also bare reals and bare ``bi`` imaginaries)."""
    tok = token.strip()
    if not tok:
        raise ValueError("empty complex token")
    if not tok.endswith(("i", "I")):
        return complex(float(tok), 0.0)
    body = tok[:-1]
    for pos in range(len(body) - 1, 0, -1):
        ch = body[pos]
        if ch in "+-" and body[pos - 1] not in "eE":
            return complex(float(body[:pos]), float(body[pos:]))
    return complex(0.0, float(body))


def _order_fields(order):
    """JSON value for the order plus an exact p/q string when rational."""
    if isinstance(order, Fraction):
        return float(order), f"{order.numerator}/{order.denominator}"
    return (float(order), None) if order is not None else (None, None)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

def write_matrix_csv(fp, matrix, digits: int = DEFAULT_DIGITS) -> None:
    mat = np.asarray(matrix, dtype=np.complex128)
    for row in mat:
        fp.write(",".join(format_complex(z, digits) for z in row))
        fp.write("\n")


def read_matrix_csv(fp) -> np.ndarray:
    rows = []
    for line in fp:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([parse_complex(tok) for tok in line.split(",")])
    if not rows:
        raise ValueError("no matrix rows found")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged matrix rows")
    return np.array(rows, dtype=np.complex128)


def matrix_json_payload(matrix, order=None, method=None, residual=None) -> dict:
    mat = np.asarray(matrix, dtype=np.complex128)
    value, exact = _order_fields(order)
    payload = {
        "order": value,
        "size": int(mat.shape[0]),
        "method": method,
        "residual": float(residual) if residual is not None else None,
        "entries": [[[z.real, z.imag] for z in row] for row in mat],
    }
    if exact is not None:
        payload["order_exact"] = exact
    return payload


def write_matrix_json(fp, matrix, order=None, method=None, residual=None) -> None:
    json.dump(matrix_json_payload(matrix, order, method, residual), fp)
    fp.write("\n")


def read_matrix_json(fp) -> tuple[np.ndarray, dict]:
    payload = json.load(fp)
    entries = payload["entries"]
    mat = np.array(
        [[complex(re, im) for re, im in row] for row in entries],
        dtype=np.complex128,
    )
    meta = {k: v for k, v in payload.items() if k != "entries"}
    return mat, meta


# ---------------------------------------------------------------------------
# signals
# ---------------------------------------------------------------------------

def write_signal_csv(fp, signal, digits: int = DEFAULT_DIGITS) -> None:
    vec = np.asarray(signal, dtype=np.complex128)
    fp.write(SIGNAL_HEADER + "\n")
    for i, z in enumerate(vec):
        fp.write(f"{i},{z.real:.{digits}g},{z.imag:.{digits}g}\n")


def read_signal_csv(fp) -> np.ndarray:
    entries = []
    saw_header = False
    for line in fp:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not saw_header:
            if line.lower().replace(" ", "") != SIGNAL_HEADER:
                raise ValueError(f"expected signal header {SIGNAL_HEADER!r}, got {line!r}")
            saw_header = True
            continue
        fields = line.split(",")
        if len(fields) != 3:
            raise ValueError(f"expected 3 columns (index,re,im), got {line!r}")
        idx, re, im = fields
        if int(idx) != len(entries):
            raise ValueError(f"signal indices out of order at {line!r}")
        entries.append(complex(float(re), float(im)))
    if not entries:
        raise ValueError("no signal samples found")
    return np.array(entries, dtype=np.complex128)


def write_signal_json(fp, signal) -> None:
    vec = np.asarray(signal, dtype=np.complex128)
    payload = {
        "size": int(vec.shape[0]),
        "entries": [[z.real, z.imag] for z in vec],
    }
    json.dump(payload, fp)
    fp.write("\n")


def read_signal_json(fp) -> np.ndarray:
    payload = json.load(fp)
    return np.array(
        [complex(re, im) for re, im in payload["entries"]], dtype=np.complex128
    )
