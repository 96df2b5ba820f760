"""Numerical dimension engine for the generator families.

Each one-parameter family acts linearly on the 27 real coordinates of
H3(O), so its derivative at parameter 0 is a 27x27 matrix, extracted by
central finite differences on the 27 coordinate basis matrices and
certified by an h vs h/2 consistency check.  Subspace dimensions are
numerical ranks of stacked, flattened tangents, decided by a relative
singular-value threshold with a mandatory spectral gap: a rank is only
reported as conclusive when the smallest accepted singular value exceeds
the largest rejected one by a factor of at least a thousand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import groups, octonion as oc
from .jordan import unvec27, vec27

FD_STEP = 1e-5
RANK_THRESHOLD = 1e-8
MIN_GAP = 1e3

SUBSET_EXPECTED = {
    "E6": 78,
    "F4": 52,
    "boosts": 26,
    "G2": 14,
    "SU3": 8,
    "SO8": 28,
    "SO7": 21,
}


class TangentConsistencyError(ArithmeticError):
    """Finite-difference tangents at steps h and h/2 disagree (non-smooth curve)."""


class SubgroupDimensionError(AssertionError):
    """A named subset's numerical rank disagrees with its expected dimension."""


@dataclass(frozen=True)
class TangentOperator:
    """27x27 linearization of a family's action at parameter 0."""

    matrix: np.ndarray
    family_id: str


@dataclass(frozen=True)
class SpanReport:
    """Numerical rank of a set of tangent operators with its spectral gap."""

    name: str
    family_ids: tuple[str, ...]
    rank: int
    singular_values: np.ndarray
    gap: float                    # smallest accepted / largest rejected; inf when nothing rejected
    conclusive: bool
    expected: int | None = None

    @property
    def passed(self) -> bool:
        return self.conclusive and (self.expected is None or self.rank == self.expected)


_BASIS27 = unvec27(np.eye(27))
_BASIS27.setflags(write=False)


def _finite_difference(action: Callable[[float, np.ndarray], np.ndarray], h: float) -> np.ndarray:
    plus = vec27(action(+h, _BASIS27))
    minus = vec27(action(-h, _BASIS27))
    # rows index the basis element, so transpose to get columns = images
    return ((plus - minus) / (2.0 * h)).T


def tangent_of_action(
    family_id: str,
    action: Callable[[float, np.ndarray], np.ndarray],
    h: float = FD_STEP,
    check: bool = True,
) -> TangentOperator:
    t = _finite_difference(action, h)
    if check:
        t_half = _finite_difference(action, h / 2.0)
        if float(np.max(np.abs(t - t_half))) > 1e-8:
            raise TangentConsistencyError(f"{family_id}: tangent differs between steps h and h/2")
    return TangentOperator(t, family_id)


def _family_action(family: groups.GeneratorFamily) -> Callable[[float, np.ndarray], np.ndarray]:
    def action(param: float, x: np.ndarray) -> np.ndarray:
        return groups.apply_transform(groups.build_transform(family, param), x)

    return action


_TANGENT_CACHE: dict[str, TangentOperator] = {}


def tangent(family: groups.GeneratorFamily, h: float = FD_STEP, check: bool = True) -> TangentOperator:
    """Tangent operator of a catalog (or variant) family, cached by id."""
    cached = _TANGENT_CACHE.get(family.id)
    if cached is None:
        cached = tangent_of_action(family.id, _family_action(family), h, check)
        _TANGENT_CACHE[family.id] = cached
    return cached


def tangents(families: Iterable[groups.GeneratorFamily]) -> list[TangentOperator]:
    return [tangent(f) for f in families]


def span_rank(
    ops: Sequence[TangentOperator],
    name: str = "span",
    expected: int | None = None,
    threshold: float = RANK_THRESHOLD,
    min_gap: float = MIN_GAP,
) -> SpanReport:
    """Numerical rank of the span of flattened tangents.

    An ambiguous rank (gap below ``min_gap``) is reported as inconclusive,
    never silently resolved.
    """
    if not ops:
        raise ValueError("span_rank needs at least one tangent operator")
    rows = np.stack([t.matrix.ravel() for t in ops])
    sv = np.linalg.svd(rows, compute_uv=False)
    rank = int(np.sum(sv > threshold * sv[0]))
    gap = math.inf if rank == len(sv) else float(sv[rank - 1] / sv[rank])
    return SpanReport(
        name=name,
        family_ids=tuple(t.family_id for t in ops),
        rank=rank,
        singular_values=sv,
        gap=gap,
        conclusive=gap >= min_gap,
        expected=expected,
    )


def subgroup_families() -> dict[str, tuple[groups.GeneratorFamily, ...]]:
    cat = groups.catalog()
    g2 = tuple(f for f in cat if f.kind.startswith("g2_class"))
    su3 = tuple(f for f in cat if f.kind in ("g2_class1", "g2_class3"))
    xy = tuple(f for f in cat if f.plane == "xy")
    phases = tuple(f for f in cat if f.kind == "phase")
    boosts = tuple(f for f in cat if f.kind == "boost")
    rotations = tuple(f for f in cat if f.kind != "boost")
    return {
        "E6": cat,
        "F4": rotations,
        "boosts": boosts,
        "G2": g2,
        "SU3": su3,
        "SO8": g2 + xy + phases,
        "SO7": g2 + phases,
    }


def subgroup_dimensions(strict: bool = True) -> dict[str, SpanReport]:
    """Ranks of the named subsets; raises on any mismatch when strict."""
    reports = {
        name: span_rank(tangents(fams), name, expected=SUBSET_EXPECTED[name])
        for name, fams in subgroup_families().items()
    }
    if strict:
        for name, rep in reports.items():
            if not rep.passed:
                raise SubgroupDimensionError(
                    f"{name}: rank {rep.rank} (expected {rep.expected}), gap {rep.gap:.3e}"
                )
    return reports


def triality_check() -> dict[str, SpanReport]:
    """The three block copies of the 28 diagonal-fixing families span one space."""
    sets = {blk: tangents(groups.so8_family_set(blk)) for blk in groups.BLOCKS}
    reports = {f"SO8_{blk}": span_rank(ops, f"SO8_{blk}", expected=28) for blk, ops in sets.items()}
    reports["SO8_pair_I_II"] = span_rank(sets["I"] + sets["II"], "SO8_pair_I_II", expected=28)
    reports["SO8_triality"] = span_rank(
        sets["I"] + sets["II"] + sets["III"], "SO8_triality", expected=28
    )
    return reports


def naive_span() -> SpanReport:
    """All 135 pre-deduplication families still only span 78 dimensions."""
    return span_rank(tangents(groups.naive_family_set()), "E6_naive", expected=78)


def flip_curve_tangents(check: bool = True) -> list[TangentOperator]:
    """Tangents of the nested double-flip curves over all 21 unit pairs."""
    ops = []
    names = oc.UNIT_NAMES
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            curve = groups.flip_curve(oc.unit(names[a]), oc.unit(names[b]))

            def action(param: float, x: np.ndarray, _curve=curve) -> np.ndarray:
                return groups.apply_transform(_curve(param), x)

            ops.append(tangent_of_action(f"flip:{names[a]}:{names[b]}", action, check=check))
    return ops


def full_rank_reports() -> dict[str, SpanReport]:
    """Every rank the dimension engine certifies, keyed by subset name."""
    reports = subgroup_dimensions(strict=False)
    reports.update(triality_check())
    reports["E6_naive"] = naive_span()
    return reports


def det_directional_derivative(op: TangentOperator, x: np.ndarray, eps: float = 1e-6) -> float:
    """Finite-difference derivative of det along the tangent's direction at x."""
    from .jordan import determinant

    v = unvec27(op.matrix @ vec27(x))
    return float((determinant(x + eps * v) - determinant(x - eps * v)) / (2.0 * eps))
