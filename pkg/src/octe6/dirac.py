"""Block decomposition of H3(O) and the 10-dimensional massless Dirac states.

Splitting off the preferred 2x2 block writes a Hermitian matrix as

    [[P, psi], [psi-dagger, n]]

with P a 2x2 Hermitian momentum block, psi a 2-component octonionic
spinor and n a real scalar.  The Freudenthal square of the assembled
matrix then comes out blockwise as

    [[tilde(psi psi-dagger) - n tilde(P), tilde(P) psi],
     [(tilde(P) psi)-dagger,             det P        ]]

where tilde is trace reversal, tilde(P) = P - tr(P) I.  The momentum-space
massless Dirac equation is tilde(P) psi = 0 together with det P = 0; its
general solution is psi = theta xi, P = theta theta-dagger, n = |xi|^2
with the components of theta in one complex subalgebra, and is exactly the
vanishing of the Freudenthal square.

The solution spectrum carries three generations labeled by the units i, j,
k: a massive particle with two spin states, its antiparticle, and a
single-helicity massless neutrino per generation, plus one sterile state
of the opposite helicity with no generation label.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import octonion as oc
from .groups import GeneratorFamily, build_transform
from .jordan import freudenthal_product, hermitian3
from .octonion import conj, matvec, mul, outer, unit


class NonCoplanarThetaError(ValueError):
    """Spinor components do not lie in a common complex subalgebra."""


class NotTypeIFamilyError(ValueError):
    """State transport needs a family acting on the preferred 2x2 block."""


@dataclass(frozen=True)
class HermitianMatrix2:
    """2x2 octonionic Hermitian matrix: real diagonal, (1,2) entry ``a``."""

    d1: float
    d2: float
    a: np.ndarray

    def as_array(self) -> np.ndarray:
        x = np.zeros((2, 2, 8))
        x[0, 0, 0], x[1, 1, 0] = self.d1, self.d2
        x[0, 1], x[1, 0] = self.a, conj(self.a)
        return x

    @property
    def trace(self) -> float:
        return self.d1 + self.d2

    @property
    def det(self) -> float:
        return self.d1 * self.d2 - float(np.dot(self.a, self.a))


def trace_reversal(p: HermitianMatrix2) -> HermitianMatrix2:
    """P - tr(P) I; applying it twice gives back P."""
    return HermitianMatrix2(-p.d2, -p.d1, p.a)


def momentum_components(p: HermitianMatrix2) -> dict[str, float]:
    """Read (t, x, y, z) from the block: diag = (t+z, t-z), entry = x - l y."""
    lslot = oc.unit_slot("l")
    return {
        "t": 0.5 * (p.d1 + p.d2),
        "x": float(p.a[0]),
        "y": -float(p.a[lslot]),
        "z": 0.5 * (p.d1 - p.d2),
    }


def dirac_residual(p: HermitianMatrix2, psi: np.ndarray) -> tuple[float, float]:
    """(|tilde(P) psi|, det P); both vanish exactly on a solution."""
    r = matvec(trace_reversal(p).as_array(), psi)
    return float(np.linalg.norm(r)), p.det


@dataclass(frozen=True)
class BlockMatrix:
    """The block form [[P, psi], [psi-dagger, n]] of a Hermitian 3x3 matrix."""

    P: HermitianMatrix2
    psi: np.ndarray  # (2, 8)
    n: float

    def assemble(self) -> np.ndarray:
        return hermitian3((self.P.d1, self.P.d2, self.n), self.P.a, self.psi[0], self.psi[1])


def _ttilde(x: np.ndarray) -> np.ndarray:
    """Trace reversal on a raw (2, 2, 8) array."""
    t = x[0, 0, 0] + x[1, 1, 0]
    out = x.copy()
    out[0, 0, 0] -= t
    out[1, 1, 0] -= t
    return out


def star_blocks(b: BlockMatrix) -> tuple[np.ndarray, np.ndarray, float]:
    """The Freudenthal square of the assembled matrix, computed blockwise.

    Returns (top-left 2x2, off-diagonal column, corner scalar); all three
    vanish exactly on Dirac solutions.
    """
    pt = trace_reversal(b.P).as_array()
    top = _ttilde(outer(b.psi)) - b.n * pt
    off = matvec(pt, b.psi)
    return top, off, b.P.det


def star_residual(b: BlockMatrix) -> float:
    top, off, corner = star_blocks(b)
    return max(float(np.abs(top).max()), float(np.abs(off).max()), abs(corner))


def freudenthal_square(b: BlockMatrix) -> np.ndarray:
    """Full 3x3 Freudenthal square of the assembled matrix (cross-check route)."""
    x = b.assemble()
    return freudenthal_product(x, x)


def blocks_from_theta(theta: np.ndarray, xi: np.ndarray) -> BlockMatrix:
    """psi = theta xi, P = theta theta-dagger, n = |xi|^2, with no admissibility check."""
    theta = np.asarray(theta, dtype=float)
    xi = np.asarray(xi, dtype=float)
    tt = outer(theta)
    p = HermitianMatrix2(float(tt[0, 0, 0]), float(tt[1, 1, 0]), tt[0, 1])
    return BlockMatrix(p, mul(theta, xi), float(np.dot(xi, xi)))


def solve_from_theta(theta: np.ndarray, xi: np.ndarray, tol: float = 1e-10) -> BlockMatrix:
    """Construct the general Dirac solution from admissible (theta, xi) data.

    The two components of theta must lie in a common complex subalgebra:
    their imaginary parts must be parallel (which forces the commutator to
    vanish); both conditions are checked against ``tol``.
    """
    theta = np.asarray(theta, dtype=float)
    im1, im2 = theta[0, 1:], theta[1, 1:]
    cross = np.linalg.norm(im1) * np.linalg.norm(im2) - abs(float(np.dot(im1, im2)))
    scale = max(1.0, float(np.max(np.abs(theta))) ** 2)
    if cross > tol * scale or float(np.linalg.norm(oc.commutator(theta[0], theta[1]))) > tol * scale:
        raise NonCoplanarThetaError("theta components do not share a complex subalgebra")
    return blocks_from_theta(theta, xi)


LEPTON_LABELS = ("e_up", "e_down", "e_up_bar", "e_down_bar", "nu", "sterile")
GENERATIONS = ("i", "j", "k")


@dataclass(frozen=True)
class DiracStateBundle:
    """One solution of the massless Dirac system with its particle labels."""

    label: str
    generation: str | None
    helicity: str | None
    theta: np.ndarray  # (2, 8)
    xi: np.ndarray     # (8,)

    def block(self) -> BlockMatrix:
        return blocks_from_theta(self.theta, self.xi)


def lepton_spectrum() -> tuple[DiracStateBundle, ...]:
    """Three generations of {e-up, e-down, both antiparticles, nu} plus one sterile state.

    The massive states are given at rest; the antiparticle spinors carry
    the conjugated generation label.  The sterile state has the opposite
    helicity of the neutrinos and no generation label.
    """
    states: list[DiracStateBundle] = []
    one, zero = oc.ONE, oc.ZERO
    for gen in GENERATIONS:
        q = unit(gen)
        states.extend(
            [
                DiracStateBundle("e_up", gen, None, np.stack([one, q]), one),
                DiracStateBundle("e_down", gen, None, np.stack([-q, one]), one),
                DiracStateBundle("e_up_bar", gen, None, np.stack([one, -q]), one),
                DiracStateBundle("e_down_bar", gen, None, np.stack([q, one]), one),
                DiracStateBundle("nu", gen, "left", np.stack([zero, q]), one),
            ]
        )
    states.append(DiracStateBundle("sterile", None, "right", np.stack([zero, one]), one))
    return tuple(states)


def spinor_compatibility_residual(m2: np.ndarray, theta: np.ndarray) -> float:
    """|M (theta theta-dagger) M-dagger - (M theta)(M theta)-dagger| for a 2x2 M."""
    lhs = oc.matmul(oc.matmul(m2, outer(theta)), oc.conj_transpose(m2))
    rhs = outer(matvec(m2, theta))
    return float(np.abs(lhs - rhs).max())


def boost_or_rotate_state(
    state: DiracStateBundle, family: GeneratorFamily, parameter: float, tol: float = 1e-10
) -> DiracStateBundle:
    """Transport a state along a family acting on the preferred 2x2 block.

    The spinor data transforms as theta -> M theta; the momentum block then
    transforms as P -> M P M-dagger because the printed basis families are
    compatible with the spinor representation, which is re-verified here.
    """
    if family.block != "I" or family.kind not in ("rotation", "boost"):
        raise NotTypeIFamilyError(f"{family.id} does not act on the preferred 2x2 block")
    m2 = build_transform(family, parameter).matrix[:2, :2, :]
    resid = spinor_compatibility_residual(m2, state.theta)
    if resid > tol:
        raise ArithmeticError(f"{family.id}: spinor compatibility residual {resid:.3e}")
    return DiracStateBundle(
        state.label, state.generation, state.helicity, matvec(m2, state.theta), state.xi
    )
