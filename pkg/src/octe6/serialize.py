"""JSON wire format for Hermitian matrices and octonions.

A matrix is the object ``{"diag": [d1, d2, d3], "o12": [...], "o13": [...],
"o23": [...]}`` with each octonion an 8-element array in the coefficient
order (1, i, j, k, kl, jl, il, l).  Round trips are bit-exact.  The lower
triangle keys o21, o31, o32 may optionally be present, in which case they
must be the conjugates of their mirrors; anything else is rejected as
non-Hermitian.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .jordan import hermitian3, parts
from .octonion import conj


class MalformedMatrixError(ValueError):
    """Structurally invalid matrix payload (keys, lengths, non-finite numbers)."""

    code = "malformed_matrix"


class NotHermitianError(ValueError):
    """Lower-triangle entries are not the conjugates of the upper triangle."""

    code = "not_hermitian"


_LOWER_OF = {"o21": "o12", "o31": "o13", "o32": "o23"}


def octonion_to_list(a: np.ndarray) -> list[float]:
    return [float(c) for c in np.asarray(a, dtype=float)]


def octonion_from_list(values, field: str = "octonion") -> np.ndarray:
    if not isinstance(values, (list, tuple)) or len(values) != 8:
        raise MalformedMatrixError(f"{field}: expected 8 coefficients")
    try:
        arr = np.array([float(v) for v in values])
    except (TypeError, ValueError):
        raise MalformedMatrixError(f"{field}: coefficients must be numbers") from None
    if not np.all(np.isfinite(arr)):
        raise MalformedMatrixError(f"{field}: coefficients must be finite")
    return arr


def matrix_to_obj(x: np.ndarray) -> dict:
    d, o12, o13, o23 = parts(np.asarray(x, dtype=float))
    return {
        "diag": [float(v) for v in d],
        "o12": octonion_to_list(o12),
        "o13": octonion_to_list(o13),
        "o23": octonion_to_list(o23),
    }


def matrix_from_obj(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise MalformedMatrixError("matrix payload must be a JSON object")
    missing = {"diag", "o12", "o13", "o23"} - obj.keys()
    if missing:
        raise MalformedMatrixError(f"matrix payload missing keys: {sorted(missing)}")
    unknown = obj.keys() - {"diag", "o12", "o13", "o23", "o21", "o31", "o32"}
    if unknown:
        raise MalformedMatrixError(f"matrix payload has unknown keys: {sorted(unknown)}")
    diag = obj["diag"]
    if not isinstance(diag, (list, tuple)) or len(diag) != 3:
        raise MalformedMatrixError("diag: expected 3 real entries")
    try:
        dvals = tuple(float(v) for v in diag)
    except (TypeError, ValueError):
        raise MalformedMatrixError("diag: entries must be numbers") from None
    if not all(math.isfinite(v) for v in dvals):
        raise MalformedMatrixError("diag: entries must be finite")
    upper = {key: octonion_from_list(obj[key], key) for key in ("o12", "o13", "o23")}
    for low, up in _LOWER_OF.items():
        if obj.get(low) is not None:
            given = octonion_from_list(obj[low], low)
            expected = conj(upper[up])
            scale = max(1.0, float(np.max(np.abs(expected))))
            if float(np.max(np.abs(given - expected))) > 1e-12 * scale:
                raise NotHermitianError(f"{low} is not the conjugate of {up}")
    return hermitian3(dvals, upper["o12"], upper["o13"], upper["o23"])


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


def loads_matrix(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedMatrixError(f"invalid JSON: {exc}") from None
    return matrix_from_obj(obj)
