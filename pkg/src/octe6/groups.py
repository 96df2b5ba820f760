"""Generator catalog of the determinant-preserving group on H3(O).

The catalog holds 78 one-parameter families: 14 octonion-automorphism
families applied entrywise, 7 diagonal rotations mixing the real axis of
the (1,2) entry with one unit, 7 phase families rotating three coefficient
planes at once, 24 block rotations (three block embeddings of 7 + 1 plane
rotations each) and 26 boosts (three embeddings of 9 with one redundant
diagonal boost removed; the type III copy is the one dropped, a fixed
convention).  Every family preserves the determinant; everything except
the boosts also preserves the trace.

Matrix families act by X -> M X M-dagger, evaluated as (M X) M-dagger;
for the catalog matrices (entries confined to one complex subalgebra) the
two bracketings agree.  Entrywise families rotate the eight coefficients
of every entry by one orthogonal map that fixes the real axis.  Nesting
applies the inner transform first: M2 (M1 X M1-dagger) M2-dagger; the
brackets cannot be flattened over the octonions.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
import math

import numpy as np

from . import octonion as oc
from .octonion import (
    TABLE,
    UNIT_NAMES,
    conj_transpose,
    exp_unit,
    hermiticity_residual,
    matmul,
    mul,
    norm_inverse,
    unit,
    unit_slot,
)

NON_L_UNITS = tuple(u for u in UNIT_NAMES if u != "l")
BLOCKS = ("I", "II", "III")

# position of each matrix index after the cyclic block embedding
_BLOCK_PERM = {"I": (0, 1, 2), "II": (1, 2, 0), "III": (2, 0, 1)}


class UnknownFamilyError(KeyError):
    """Family id not present in the catalog."""


class TransformCompositionError(ArithmeticError):
    """A matrix action produced a non-Hermitian result beyond tolerance."""


@dataclass(frozen=True)
class GeneratorFamily:
    """A named one-parameter curve of determinant-preserving transformations."""

    id: str
    kind: str                      # rotation | boost | phase | g2_class1 | g2_class2 | g2_class3
    block: str = "none"            # I | II | III | none
    plane: str | None = None       # xy | yz | zx | tz | tx | ty
    unit: str | None = None
    target_unit: str | None = None
    parameter: float = 0.0


@dataclass(frozen=True)
class MatrixTransform:
    """A concrete transformation of H3(O) at a fixed parameter value.

    mode "single": X -> (matrix X) matrix-dagger.
    mode "entrywise": rotate the 8 coefficients of every entry by
    ``rotation`` (an automorphism of the octonions, so the action
    preserves the Jordan and Freudenthal products).
    ``inner`` is applied first when set (nested form).
    """

    mode: str
    matrix: np.ndarray | None = None
    rotation: np.ndarray | None = None
    inner: "MatrixTransform | None" = None


@dataclass(frozen=True)
class InnerAutomorphismElement:
    """Conjugator a = exp(n pi s/3); only sixth roots of unity act as automorphisms."""

    a: np.ndarray
    n: int
    s_hat: np.ndarray


def sixth_root(n: int, s_hat: np.ndarray) -> InnerAutomorphismElement:
    return InnerAutomorphismElement(exp_unit(s_hat, n * math.pi / 3.0), n, np.asarray(s_hat, float))


@lru_cache(maxsize=1)
def catalog() -> tuple[GeneratorFamily, ...]:
    """The 78 basis families: 14 + 7 + 7 + 24 + 26."""
    fams: list[GeneratorFamily] = []
    for u in NON_L_UNITS:
        fams.append(GeneratorFamily(f"g2:c1:{u}", "g2_class1", target_unit=u))
    for u in NON_L_UNITS:
        fams.append(GeneratorFamily(f"g2:c2:{u}", "g2_class2", target_unit=u))
    for lead in ("i", "j"):
        fams.append(GeneratorFamily(f"g2:c3:{lead}", "g2_class3", unit=lead, target_unit="l"))
    for u in UNIT_NAMES:
        fams.append(GeneratorFamily(f"rot:xy:{u}", "rotation", block="I", plane="xy", unit=u))
    for u in UNIT_NAMES:
        fams.append(GeneratorFamily(f"phase:{u}", "phase", unit=u))
    for blk in BLOCKS:
        for u in UNIT_NAMES:
            fams.append(GeneratorFamily(f"rot:yz:{u}:{blk}", "rotation", block=blk, plane="yz", unit=u))
        fams.append(GeneratorFamily(f"rot:zx:{blk}", "rotation", block=blk, plane="zx"))
    for blk in BLOCKS:
        if blk != "III":  # the three diagonal boosts sum to zero; drop the type III copy
            fams.append(GeneratorFamily(f"boost:tz:{blk}", "boost", block=blk, plane="tz"))
        fams.append(GeneratorFamily(f"boost:tx:{blk}", "boost", block=blk, plane="tx"))
        for u in UNIT_NAMES:
            fams.append(GeneratorFamily(f"boost:ty:{u}:{blk}", "boost", block=blk, plane="ty", unit=u))
    return tuple(fams)


@lru_cache(maxsize=1)
def _by_id() -> dict[str, GeneratorFamily]:
    return {f.id: f for f in catalog()}


def family_by_id(fid: str) -> GeneratorFamily:
    try:
        return _by_id()[fid]
    except KeyError:
        raise UnknownFamilyError(fid) from None


def permute_block(m: np.ndarray, block: str) -> np.ndarray:
    """Move a type-I matrix to the II or III block embedding."""
    perm = _BLOCK_PERM[block]
    out = np.zeros_like(m)
    for a in range(3):
        for b in range(3):
            out[perm[a], perm[b]] = m[a, b]
    return out


def _diag_matrix(m11: np.ndarray, m22: np.ndarray, m33: np.ndarray) -> np.ndarray:
    m = np.zeros((3, 3, 8))
    m[0, 0], m[1, 1], m[2, 2] = m11, m22, m33
    return m


def _block2(m11, m12, m21, m22) -> np.ndarray:
    m = np.zeros((3, 3, 8))
    m[0, 0], m[0, 1], m[1, 0], m[1, 1] = m11, m12, m21, m22
    m[2, 2] = oc.ONE
    return m


def _base_matrix(plane: str, unit_name: str | None, t: float) -> np.ndarray:
    """Type-I position of the printed one-parameter matrices."""
    if plane == "xy":
        q = unit(unit_name)
        return _diag_matrix(exp_unit(q, -t / 2), exp_unit(q, t / 2), oc.ONE)
    if plane == "yz":
        q = unit(unit_name)
        c, s = math.cos(t / 2), math.sin(t / 2)
        return _block2(c * oc.ONE, -s * q, -s * q, c * oc.ONE)
    if plane == "zx":
        c, s = math.cos(t / 2), math.sin(t / 2)
        return _block2(c * oc.ONE, -s * oc.ONE, s * oc.ONE, c * oc.ONE)
    if plane == "tz":
        return _diag_matrix(math.exp(t / 2) * oc.ONE, math.exp(-t / 2) * oc.ONE, oc.ONE)
    if plane == "tx":
        ch, sh = math.cosh(t / 2), math.sinh(t / 2)
        return _block2(ch * oc.ONE, sh * oc.ONE, sh * oc.ONE, ch * oc.ONE)
    if plane == "ty":
        q = unit(unit_name)
        ch, sh = math.cosh(t / 2), math.sinh(t / 2)
        return _block2(ch * oc.ONE, -sh * q, sh * q, ch * oc.ONE)
    raise ValueError(f"unknown plane {plane!r}")


def _phase_matrix(unit_name: str, t: float) -> np.ndarray:
    q = unit(unit_name)
    return _diag_matrix(exp_unit(q, t / 2), exp_unit(q, t / 2), exp_unit(q, -t))


def build_transform(family: GeneratorFamily, parameter: float | None = None) -> MatrixTransform:
    """Instantiate a family at a parameter value (family.parameter when omitted)."""
    t = family.parameter if parameter is None else float(parameter)
    if family.kind.startswith("g2_class"):
        return MatrixTransform(mode="entrywise", rotation=g2_coefficient_rotation(family, t))
    if family.kind == "phase":
        m = _phase_matrix(family.unit, t)
        if family.block in ("II", "III"):
            m = permute_block(m, family.block)
        return MatrixTransform(mode="single", matrix=m)
    m = _base_matrix(family.plane, family.unit, t)
    if family.block in ("II", "III"):
        m = permute_block(m, family.block)
    return MatrixTransform(mode="single", matrix=m)


def apply_transform(transform: MatrixTransform, x: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Act on Hermitian matrices of shape (..., 3, 3, 8).

    Raises TransformCompositionError when the raw product drifts from
    Hermiticity beyond ``tol`` times the result scale, which flags matrix
    entries spread over incompatible subalgebras.
    """
    if transform.inner is not None:
        x = apply_transform(transform.inner, x, tol)
    if transform.mode == "entrywise":
        return np.einsum("fe,...e->...f", transform.rotation, x)
    m = transform.matrix
    y = matmul(matmul(m, x), conj_transpose(m))
    scale = max(1.0, float(np.max(np.abs(y))))
    if hermiticity_residual(y) > tol * scale:
        raise TransformCompositionError("matrix action produced a non-Hermitian result")
    return 0.5 * (y + conj_transpose(y))


def apply_family(family: GeneratorFamily, parameter: float, x: np.ndarray) -> np.ndarray:
    return apply_transform(build_transform(family, parameter), x)


def nested_apply(outer: MatrixTransform, inner: MatrixTransform, x: np.ndarray) -> np.ndarray:
    """M2 (M1 X M1-dagger) M2-dagger, inner transform first."""
    return apply_transform(outer, apply_transform(inner, x))


def flip(p: np.ndarray) -> MatrixTransform:
    """diag(p, p, 1) for a pure imaginary unit p; pairs of flips nest into rotations."""
    p = np.asarray(p, dtype=float)
    if abs(p[0]) > 1e-12 or abs(np.linalg.norm(p) - 1.0) > 1e-12:
        raise ValueError("flip requires a pure imaginary unit octonion")
    return MatrixTransform(mode="single", matrix=_diag_matrix(p, p, oc.ONE))


def flip_curve(u: np.ndarray, w: np.ndarray):
    """One-parameter nested double flip: inner flip at -u, outer flip tilted toward w.

    A flip squares to the involution that negates the two spinor entries,
    so the inner flip carries -u (its inverse direction) to make the pair
    cancel exactly at parameter 0.  The tangent is then a rotation of the
    imaginary units, one of the plane rotations completing the 21 that fix
    the real axis of every entry.
    """
    u = np.asarray(u, dtype=float)
    w = np.asarray(w, dtype=float)

    def at(theta: float) -> MatrixTransform:
        p = math.cos(theta / 2) * u + math.sin(theta / 2) * w
        return MatrixTransform(mode="single", matrix=_diag_matrix(p, p, oc.ONE), inner=flip(-u))

    return at


# -- octonion automorphisms ---------------------------------------------------


@lru_cache(maxsize=None)
def _oriented_pairs(target: str) -> tuple[tuple[int, int], ...]:
    """The three ordered unit-slot pairs (a, b) with e_a e_b = +target."""
    tslot = unit_slot(target)
    pairs = []
    for x in range(1, 8):
        for y in range(x + 1, 8):
            k, s = TABLE.entry(x, y)
            if k == tslot:
                pairs.append((x, y) if s > 0 else (y, x))
    assert len(pairs) == 3
    return tuple(pairs)


def _plane_rotation(pairs_angles) -> np.ndarray:
    r = np.eye(8)
    for (a, b), ang in pairs_angles:
        c, s = math.cos(ang), math.sin(ang)
        r[a, a] = c
        r[b, b] = c
        r[b, a] = s
        r[a, b] = -s
    return r


def g2_rotation(cls: int, target: str, alpha: float, variant: int = 0) -> np.ndarray:
    """Coefficient rotation of one automorphism class at angle alpha.

    Class 1 and 2 point at a unit other than l; class 3 points at l.  Each
    rotates whole coordinate planes: class 1 turns the two pairs not
    containing l by (+alpha, -alpha), class 2 turns them by (+alpha,
    +alpha) and the l-pair by -2 alpha, class 3 turns two of the pairs
    (il,i), (jl,j), (kl,k) by (+alpha, -alpha), selected by ``variant``.
    """
    if cls == 3:
        if target != "l":
            raise ValueError("class 3 points at l")
        ordered = sorted(_oriented_pairs("l"), key=lambda p: p[1])
        plus, minus = ordered[variant], ordered[variant + 1]
        return _plane_rotation([(plus, alpha), (minus, -alpha)])
    if target == "l":
        raise ValueError("classes 1 and 2 point at a unit other than l")
    pairs = _oriented_pairs(target)
    lslot = unit_slot("l")
    rest = sorted((p for p in pairs if lslot not in p), key=lambda p: p[0])
    lpair = next(p for p in pairs if lslot in p)
    if cls == 1:
        return _plane_rotation([(rest[0], alpha), (rest[1], -alpha)])
    if cls == 2:
        return _plane_rotation([(rest[0], alpha), (rest[1], alpha), (lpair, -2.0 * alpha)])
    raise ValueError(f"unknown class {cls}")


def g2_apply(cls: int, target: str, alpha: float, x: np.ndarray, variant: int = 0) -> np.ndarray:
    """Apply one automorphism-class rotation to an octonion."""
    return g2_rotation(cls, target, alpha, variant) @ np.asarray(x, dtype=float)


def g2_coefficient_rotation(family: GeneratorFamily, alpha: float) -> np.ndarray:
    cls = int(family.kind[-1])
    variant = 0 if family.unit in (None, "i") else 1
    return g2_rotation(cls, family.target_unit, alpha, variant)


def inner_automorphism(a: np.ndarray, x: np.ndarray) -> np.ndarray:
    """a x a^-1; an automorphism of the octonions only for sixth roots of unity."""
    _, ainv = norm_inverse(a)
    if ainv is None:
        raise ZeroDivisionError("cannot conjugate by the zero octonion")
    return mul(mul(a, x), ainv)


_UNIT_STACK = np.eye(8)[1:]
_UNIT_STACK.setflags(write=False)


def conjugation_residual(a: np.ndarray) -> tuple[float, tuple[str, str]]:
    """Largest homomorphism defect of x -> a x a^-1 over all 49 unit pairs."""
    _, ainv = norm_inverse(a)
    if ainv is None:
        raise ZeroDivisionError("cannot conjugate by the zero octonion")
    conj_units = mul(mul(a, _UNIT_STACK), ainv)                      # (7, 8)
    prods = mul(_UNIT_STACK[:, None, :], _UNIT_STACK[None, :, :])    # (7, 7, 8)
    lhs = mul(conj_units[:, None, :], conj_units[None, :, :])
    rhs = mul(mul(a, prods), ainv)
    norms = np.linalg.norm(lhs - rhs, axis=-1)
    x, y = np.unravel_index(int(np.argmax(norms)), norms.shape)
    return float(norms[x, y]), (UNIT_NAMES[x], UNIT_NAMES[y])


def is_valid_conjugator(a: np.ndarray, tol: float = 1e-10) -> bool:
    worst, _ = conjugation_residual(a)
    return worst <= tol


# -- auxiliary family sets (not part of the 78-element catalog) ---------------


def xy_variant(unit_name: str, block: str) -> GeneratorFamily:
    fam = family_by_id(f"rot:xy:{unit_name}")
    if block == "I":
        return fam
    return replace(fam, id=f"rot:xy:{unit_name}:{block}", block=block)


def phase_variant(unit_name: str, block: str) -> GeneratorFamily:
    fam = family_by_id(f"phase:{unit_name}")
    if block == "I":
        return fam
    return replace(fam, id=f"phase:{unit_name}:{block}", block=block)


def so8_family_set(block: str) -> tuple[GeneratorFamily, ...]:
    """One block's 28 diagonal-fixing families: automorphisms + rotations + phases."""
    g2 = tuple(f for f in catalog() if f.kind.startswith("g2_class"))
    xy = tuple(xy_variant(u, block) for u in UNIT_NAMES)
    ph = tuple(phase_variant(u, block) for u in UNIT_NAMES)
    return g2 + xy + ph


def naive_family_set() -> tuple[GeneratorFamily, ...]:
    """Three full 45-element copies (135 total), before any deduplication."""
    fams: list[GeneratorFamily] = []
    for blk in BLOCKS:
        fams.extend(so8_family_set(blk))
        for u in UNIT_NAMES:
            fams.append(family_by_id(f"rot:yz:{u}:{blk}"))
        fams.append(family_by_id(f"rot:zx:{blk}"))
        tz = f"boost:tz:{blk}"
        fams.append(family_by_id(tz) if blk != "III"
                    else GeneratorFamily("boost:tz:III", "boost", block="III", plane="tz"))
        fams.append(family_by_id(f"boost:tx:{blk}"))
        for u in UNIT_NAMES:
            fams.append(family_by_id(f"boost:ty:{u}:{blk}"))
    return tuple(fams)
