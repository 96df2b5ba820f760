"""Octonion arithmetic on float coefficient arrays.

Coefficient order is ``(1, i, j, k, kl, jl, il, l)``: slot 0 is the real
axis, slots 1..7 the seven imaginary units.  Every operation works on numpy
arrays whose last axis has length 8 and broadcasts over leading axes, so a
single octonion is an array of shape ``(8,)`` and a batch of n products is
one call on ``(n, 8)`` arrays.

The multiplication table is generated once by Cayley-Dickson doubling of
the quaternions: writing x = q + r*l with q = x0 + x1 i + x2 j + x3 k and
r = x7 + x6 i + x5 j + x4 k, products follow

    (a + b*l)(c + d*l) = (a c - conj(d) b) + (d a + b conj(c)) l

which pins every sign.  In particular k*l = kl, l*kl = k, kl*k = l,
(i j) l = kl and i (j l) = -kl.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BASIS_NAMES = ("1", "i", "j", "k", "kl", "jl", "il", "l")
UNIT_NAMES = BASIS_NAMES[1:]

# Quaternion table in the basis (1, i, j, k): row = left factor.
_QUAT_INDEX = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)
_QUAT_SIGN = (
    (1, 1, 1, 1),
    (1, -1, 1, -1),
    (1, -1, -1, 1),
    (1, 1, -1, -1),
)


def _build_structure() -> tuple[np.ndarray, np.ndarray]:
    index = np.zeros((8, 8), dtype=np.int64)
    sign = np.zeros((8, 8))
    for x in range(8):
        hx, qx = (0, x) if x < 4 else (1, 7 - x)
        for y in range(8):
            hy, qy = (0, y) if y < 4 else (1, 7 - y)
            if hx == 0 and hy == 0:
                h, k, s = 0, _QUAT_INDEX[qx][qy], _QUAT_SIGN[qx][qy]
            elif hx == 0:
                # (a, 0)(0, d) = (0, d a)
                h, k, s = 1, _QUAT_INDEX[qy][qx], _QUAT_SIGN[qy][qx]
            elif hy == 0:
                # (0, b)(c, 0) = (0, b conj(c))
                cs = 1 if qy == 0 else -1
                h, k, s = 1, _QUAT_INDEX[qx][qy], cs * _QUAT_SIGN[qx][qy]
            else:
                # (0, b)(0, d) = (-conj(d) b, 0)
                cs = 1 if qy == 0 else -1
                h, k, s = 0, _QUAT_INDEX[qy][qx], -cs * _QUAT_SIGN[qy][qx]
            index[x, y] = k if h == 0 else 7 - k
            sign[x, y] = s
    return index, sign


_INDEX, _SIGN = _build_structure()

# Dense structure tensor: e_p e_q = sum_r MUL_TENSOR[p, q, r] e_r.
MUL_TENSOR = np.zeros((8, 8, 8))
MUL_TENSOR[np.arange(8)[:, None], np.arange(8)[None, :], _INDEX] = _SIGN

_CONJ_SIGNS = np.array([1.0, -1, -1, -1, -1, -1, -1, -1])

for _arr in (_INDEX, _SIGN, MUL_TENSOR, _CONJ_SIGNS):
    _arr.setflags(write=False)


@dataclass(frozen=True)
class StructureTable:
    """Signed products of ordered basis pairs: e_x e_y = sign[x,y] e_index[x,y]."""

    index: np.ndarray
    sign: np.ndarray

    def entry(self, x: int, y: int) -> tuple[int, float]:
        return int(self.index[x, y]), float(self.sign[x, y])

    def unit_rows(self) -> list[list[str]]:
        """The 7x7 table of signed unit products as printable names."""
        rows = []
        for x in range(1, 8):
            row = []
            for y in range(1, 8):
                k, s = self.entry(x, y)
                row.append(("-" if s < 0 else "") + BASIS_NAMES[k])
            rows.append(row)
        return rows


TABLE = StructureTable(_INDEX, _SIGN)

ZERO = np.zeros(8)
ONE = np.zeros(8)
ONE[0] = 1.0
for _arr in (ZERO, ONE):
    _arr.setflags(write=False)


def basis(slot: int) -> np.ndarray:
    e = np.zeros(8)
    e[slot] = 1.0
    return e


def unit_slot(name: str) -> int:
    """Coefficient slot (1..7) of a named imaginary unit."""
    try:
        return UNIT_NAMES.index(name) + 1
    except ValueError:
        raise ValueError(f"unknown unit {name!r}; expected one of {UNIT_NAMES}") from None


def unit(name: str) -> np.ndarray:
    return basis(unit_slot(name))


def scalar(x: float) -> np.ndarray:
    e = np.zeros(8)
    e[0] = x
    return e


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Octonion product; broadcasts over leading axes."""
    return np.einsum("...i,...j,ijk->...k", a, b, MUL_TENSOR, optimize=True)


def conj(a: np.ndarray) -> np.ndarray:
    return np.asarray(a) * _CONJ_SIGNS


def norm(a: np.ndarray) -> np.ndarray:
    return np.linalg.norm(a, axis=-1)


def norm_inverse(a: np.ndarray) -> tuple[float, np.ndarray | None]:
    """Norm of ``a`` and its inverse conj(a)/|a|^2; the inverse is None exactly for a = 0."""
    a = np.asarray(a, dtype=float)
    n = float(np.linalg.norm(a))
    if n == 0.0:
        return 0.0, None
    return n, conj(a) / (n * n)


def inverse(a: np.ndarray) -> np.ndarray:
    _, inv = norm_inverse(a)
    if inv is None:
        raise ZeroDivisionError("the zero octonion has no inverse")
    return inv


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return mul(a, b) - mul(b, a)


def associator(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """(ab)c - a(bc); totally antisymmetric, zero on any two equal arguments."""
    return mul(mul(a, b), c) - mul(a, mul(b, c))


def exp_unit(s_hat: np.ndarray, theta, tol: float = 1e-12) -> np.ndarray:
    """cos(theta) + s_hat sin(theta) for a pure imaginary unit direction s_hat."""
    s_hat = np.asarray(s_hat, dtype=float)
    if np.max(np.abs(s_hat[..., 0])) > tol:
        raise ValueError("exp_unit requires a pure imaginary direction")
    if np.max(np.abs(np.linalg.norm(s_hat, axis=-1) - 1.0)) > tol:
        raise ValueError("exp_unit requires a unit-norm direction")
    theta = np.asarray(theta, dtype=float)
    return np.cos(theta)[..., None] * ONE + np.sin(theta)[..., None] * s_hat


def polar(a: np.ndarray) -> tuple[float, np.ndarray, float]:
    """Decompose a nonzero octonion as r * exp_unit(s_hat, theta)."""
    a = np.asarray(a, dtype=float)
    r = float(np.linalg.norm(a))
    if r == 0.0:
        raise ZeroDivisionError("the zero octonion has no polar form")
    im = a.copy()
    im[0] = 0.0
    im_norm = float(np.linalg.norm(im))
    theta = math.atan2(im_norm, float(a[0]))
    if im_norm == 0.0:
        # real a: any direction works, pick i
        return r, basis(1), theta
    return r, im / im_norm, theta


# -- octonion-entried matrices (any square size, shape (..., n, m, 8)) --------


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with octonion entries: (..., n, m, 8) x (..., m, p, 8)."""
    return np.einsum("...ijp,...jkq,pqr->...ikr", a, b, MUL_TENSOR, optimize=True)


def matvec(a: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Matrix times column vector: (..., n, m, 8) x (..., m, 8)."""
    return np.einsum("...ijp,...jq,pqr->...ir", a, v, MUL_TENSOR, optimize=True)


def conj_transpose(a: np.ndarray) -> np.ndarray:
    return conj(np.swapaxes(a, -3, -2))


def outer(u: np.ndarray, v: np.ndarray | None = None) -> np.ndarray:
    """u v-dagger for octonion columns of shape (..., n, 8); v defaults to u."""
    if v is None:
        v = u
    return np.einsum("...ip,...jq,pqr->...ijr", u, conj(v), MUL_TENSOR, optimize=True)


def hermitian_dot(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """u-dagger v = sum_i conj(u_i) v_i for columns of shape (..., n, 8)."""
    return np.einsum("...ip,...iq,pqr->...r", conj(u), v, MUL_TENSOR, optimize=True)


def hermiticity_residual(x: np.ndarray) -> float:
    """Largest entry of x - x-dagger."""
    return float(np.max(np.abs(x - conj_transpose(x))))
