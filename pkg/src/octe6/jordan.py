"""The exceptional Jordan algebra of 3x3 octonionic Hermitian matrices.

A matrix is stored as an array of shape ``(..., 3, 3, 8)``: entry (i, j) is
an octonion, the diagonal is real and the lower triangle is the conjugate
of the upper one.  The 27 real degrees of freedom are ordered as
``(d1, d2, d3, o12[0..7], o13[0..7], o23[0..7])`` by :func:`vec27`; this is
also the JSON wire order.

Products: the Jordan product A o B = (AB + BA)/2, the Freudenthal product

    A * B = A o B - (A tr B + B tr A)/2 + ((tr A)(tr B) - tr(A o B))/2 I

(the bilinearization of the classical adjugate), and the invariants

    sigma(A) = ((tr A)^2 - tr(A o A))/2 = tr(A * A)
    det(A)   = tr((A * A) o A)/3

The eigenvalue problem A o V = lambda V has three real eigenvalues, the
roots of lambda^3 - tr(A) lambda^2 + sigma(A) lambda - det(A) = 0, and A
splits as a sum of eigenvalue-weighted orthogonal primitive idempotents
(trace-1 elements V with V o V = V, the points of the octonionic
projective plane).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .octonion import associator, conj, matmul, outer


class EigenvalueConsistencyError(ArithmeticError):
    """The characteristic cubic acquired complex roots beyond roundoff."""


class SpinorAssociationError(ValueError):
    """Spinor components do not associate (nonzero component associator)."""


class SpinorNormalizationError(ValueError):
    """Spinor is not normalized to unit Hermitian square norm."""


def hermitian3(diag, o12, o13, o23) -> np.ndarray:
    """Assemble a Hermitian matrix from its diagonal and upper-triangle octonions."""
    x = np.zeros((3, 3, 8))
    x[0, 0, 0], x[1, 1, 0], x[2, 2, 0] = diag
    x[0, 1], x[0, 2], x[1, 2] = o12, o13, o23
    x[1, 0], x[2, 0], x[2, 1] = conj(o12), conj(o13), conj(o23)
    return x


def parts(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    return x[..., (0, 1, 2), (0, 1, 2), 0], x[..., 0, 1, :], x[..., 0, 2, :], x[..., 1, 2, :]


def identity3() -> np.ndarray:
    return hermitian3((1.0, 1.0, 1.0), np.zeros(8), np.zeros(8), np.zeros(8))


IDENT3 = identity3()
IDENT3.setflags(write=False)

_E_DIAG = [hermitian3(tuple(1.0 * (m == n) for m in range(3)), np.zeros(8), np.zeros(8), np.zeros(8)) for n in range(3)]


def diag_idempotent(n: int) -> np.ndarray:
    return _E_DIAG[n].copy()


def trace(x: np.ndarray) -> np.ndarray:
    return x[..., 0, 0, 0] + x[..., 1, 1, 0] + x[..., 2, 2, 0]


def frob(x: np.ndarray) -> np.ndarray:
    return np.linalg.norm(x, axis=(-3, -2, -1)) if x.ndim > 3 else float(np.linalg.norm(x))


def jordan_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return 0.5 * (matmul(a, b) + matmul(b, a))


def freudenthal_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    ab = jordan_product(a, b)
    tra = trace(a)[..., None, None, None]
    trb = trace(b)[..., None, None, None]
    trab = trace(ab)[..., None, None, None]
    return ab - 0.5 * (a * trb + b * tra) + 0.5 * (tra * trb - trab) * IDENT3


def sigma_quadratic(a: np.ndarray) -> np.ndarray:
    """sigma from the trace formula ((tr A)^2 - tr(A o A))/2."""
    return 0.5 * (trace(a) ** 2 - trace(jordan_product(a, a)))


def sigma_freudenthal(a: np.ndarray) -> np.ndarray:
    """sigma as tr(A * A); agrees with :func:`sigma_quadratic`."""
    return trace(freudenthal_product(a, a))


def determinant(a: np.ndarray) -> np.ndarray:
    return trace(jordan_product(freudenthal_product(a, a), a)) / 3.0


def invariants(a: np.ndarray) -> tuple[float, float, float]:
    """(trace, sigma, det) of a single Hermitian matrix."""
    return float(trace(a)), float(sigma_quadratic(a)), float(determinant(a))


def _cubic_roots(e1: float, e2: float, e3: float, scale: float) -> np.ndarray:
    """Descending real roots of x^3 - e1 x^2 + e2 x - e3 = 0.

    Uses the arccos form for three real roots; the cosine argument is
    clamped to [-1, 1] to absorb roundoff.  A discriminant more negative
    than -1e-9 * scale^3 means the coefficients cannot come from a
    Hermitian matrix and is reported as an error.
    """
    p = e2 - e1 * e1 / 3.0
    q = -2.0 * e1**3 / 27.0 + e1 * e2 / 3.0 - e3
    disc = -4.0 * p**3 - 27.0 * q * q
    if disc < -1e-9 * max(1.0, scale) ** 3:
        raise EigenvalueConsistencyError(
            f"characteristic cubic has complex roots: discriminant {disc:.3e}"
        )
    u = 2.0 * math.sqrt(max(-p, 0.0) / 3.0)
    if u == 0.0:
        t = np.zeros(3)
    else:
        psi = math.acos(min(1.0, max(-1.0, -4.0 * q / u**3))) / 3.0
        t = u * np.cos(psi - 2.0 * np.pi * np.arange(3) / 3.0)
    return np.sort(t + e1 / 3.0)[::-1]


def eigenvalues(a: np.ndarray) -> np.ndarray:
    """The three real eigenvalues of A o V = lambda V, sorted descending."""
    e1, e2, e3 = invariants(a)
    return _cubic_roots(e1, e2, e3, frob(a))


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (descending) with their orthogonal primitive idempotents."""

    eigenvalues: np.ndarray      # (3,)
    idempotents: np.ndarray      # (3, 3, 3, 8)
    degenerate: bool
    eigen_residuals: np.ndarray  # (3,) norms of A o V_i - lambda_i V_i

    def reconstruct(self) -> np.ndarray:
        return np.einsum("n,nijc->ijc", self.eigenvalues, self.idempotents)


def _adjugate_idempotent(a: np.ndarray, lam: float) -> np.ndarray:
    # B = A - lam I has a simple zero eigenvalue, so B * B is rank one with
    # trace sigma(B) != 0; normalizing gives the eigenmatrix.
    b = a - lam * IDENT3
    bb = freudenthal_product(b, b)
    return bb / trace(bb)


def _split_rank2(w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # W is a rank-2 idempotent with quaternionic entries; its largest-diagonal
    # column, normalized as a spinor square, is a primitive idempotent below W.
    c = int(np.argmax(np.diagonal(w[..., 0])))
    v = w[:, c, :]
    v2 = outer(v) / float(np.sum(v * v))
    return v2, w - v2


def spectral_decompose(a: np.ndarray, gap_tol: float = 1e-8) -> SpectralDecomposition:
    """Split A into eigenvalue-weighted orthogonal primitive idempotents.

    Eigenvalues closer than ``gap_tol * max(1, |A|)`` are treated as
    degenerate: the idempotent of the remaining simple root is computed
    from the Freudenthal adjugate and the rank-2 complement is split by
    normalizing its dominant column.  A triple root returns the diagonal
    frame.
    """
    lam = eigenvalues(a)
    gap = gap_tol * max(1.0, frob(a))
    top_close = lam[0] - lam[1] < gap
    bot_close = lam[1] - lam[2] < gap
    if top_close and bot_close:
        idem = np.stack([diag_idempotent(0), diag_idempotent(1), diag_idempotent(2)])
        degenerate = True
    elif top_close or bot_close:
        simple = 2 if top_close else 0
        vs = _adjugate_idempotent(a, lam[simple])
        v2, v3 = _split_rank2(IDENT3 - vs)
        idem = np.stack([v2, v3, vs] if simple == 2 else [vs, v2, v3])
        degenerate = True
    else:
        idem = np.stack([_adjugate_idempotent(a, l) for l in lam])
        degenerate = False
    resid = np.array([frob(jordan_product(a, idem[n]) - lam[n] * idem[n]) for n in range(3)])
    return SpectralDecomposition(lam, idem, degenerate, resid)


@dataclass(frozen=True)
class Op2Report:
    """Residuals of the two characterizations of the octonionic projective plane."""

    is_member: bool
    idempotency: float        # |V o V - V|
    trace_error: float        # |tr V - 1|
    freudenthal: float        # |V * V|
    component_associator: float

    def __bool__(self) -> bool:
        return self.is_member


def op2_membership(v: np.ndarray, tol: float = 1e-8) -> Op2Report:
    """Check V o V = V and tr V = 1 (equivalently V * V = 0 and tr V = 1)."""
    idem = frob(jordan_product(v, v) - v)
    terr = abs(float(trace(v)) - 1.0)
    fre = frob(freudenthal_product(v, v))
    _, o12, o13, o23 = parts(v)
    comp = float(np.linalg.norm(associator(o12, o13, o23)))
    return Op2Report(idem <= tol and terr <= tol and fre <= tol, idem, terr, fre, comp)


def spinor_associator(psi: np.ndarray) -> np.ndarray:
    """Associator of the three components of a 3-column spinor."""
    return associator(psi[..., 0, :], psi[..., 1, :], psi[..., 2, :])


def spinor_square(psi: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Psi Psi-dagger for a normalized, associating 3-component spinor."""
    psi = np.asarray(psi, dtype=float)
    if float(np.linalg.norm(spinor_associator(psi))) > tol:
        raise SpinorAssociationError("spinor components have a nonzero associator")
    if abs(float(np.sum(psi * psi)) - 1.0) > tol:
        raise SpinorNormalizationError("spinor is not normalized to Psi-dagger Psi = 1")
    return outer(psi)


def trace_form(v: np.ndarray, w: np.ndarray) -> float:
    """tr(V o W), the Jordan-product pairing that generalizes |<v|w>|^2."""
    return float(trace(jordan_product(v, w)))


def vec27(x: np.ndarray) -> np.ndarray:
    """Flatten to the canonical 27 coordinates (diag, o12, o13, o23)."""
    d, o12, o13, o23 = parts(x)
    return np.concatenate([d, o12, o13, o23], axis=-1)


def unvec27(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    x = np.zeros(v.shape[:-1] + (3, 3, 8))
    x[..., 0, 0, 0], x[..., 1, 1, 0], x[..., 2, 2, 0] = v[..., 0], v[..., 1], v[..., 2]
    x[..., 0, 1, :], x[..., 0, 2, :], x[..., 1, 2, :] = v[..., 3:11], v[..., 11:19], v[..., 19:27]
    x[..., 1, 0, :] = conj(v[..., 3:11])
    x[..., 2, 0, :] = conj(v[..., 11:19])
    x[..., 2, 1, :] = conj(v[..., 19:27])
    return x


__all__ = [
    "EigenvalueConsistencyError",
    "SpinorAssociationError",
    "SpinorNormalizationError",
    "Op2Report",
    "SpectralDecomposition",
    "IDENT3",
    "determinant",
    "diag_idempotent",
    "eigenvalues",
    "freudenthal_product",
    "frob",
    "hermitian3",
    "identity3",
    "invariants",
    "jordan_product",
    "op2_membership",
    "parts",
    "sigma_freudenthal",
    "sigma_quadratic",
    "spectral_decompose",
    "spinor_associator",
    "spinor_square",
    "trace",
    "trace_form",
    "unvec27",
    "vec27",
]
