"""Vertex sums, antimagic checks and the sum-interval structure of the construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .errors import LabelingError
from .tree import Spine, Tree

if TYPE_CHECKING:
    from .labeler import Step1Trace


@dataclass(frozen=True)
class VertexClassification:
    """Degree-1 vertices, degree-2 plus light vertices, and heavy vertices.

    ``light`` and ``heavy`` hold spine indices (ascending); ``v1``, ``v2``
    and ``v3`` hold vertex ids.
    """

    v1: list[int]
    v2: list[int]
    v3: list[int]
    light: list[int]
    heavy: list[int]


def classify_vertices(spine: Spine, trace: Step1Trace) -> VertexClassification:
    p = spine.p
    path = np.asarray(spine.path, dtype=np.int64)
    is_light = np.zeros(p + 1, dtype=bool)
    is_light[trace.light] = True
    inner = np.zeros(p + 1, dtype=bool)
    inner[1:p] = True
    is_heavy = inner & (spine.leg_counts > 0) & ~is_light
    v1 = [int(path[0]), int(path[p])] + spine.leg_leaf.tolist()
    v2 = path[inner & ~is_heavy].tolist()
    v3 = path[is_heavy].tolist()
    light = np.flatnonzero(is_light).tolist()
    heavy = np.flatnonzero(is_heavy).tolist()
    return VertexClassification(v1, v2, v3, light, heavy)


@dataclass
class SumReport:
    sums: list[int]
    distinct: bool
    duplicates: list[tuple[int, int, int]]
    class_intervals: dict[str, tuple[int, int] | None] = field(default_factory=dict)


def check_bijection(t: Tree, labels: Sequence[int]) -> np.ndarray:
    """Raise :class:`LabelingError` unless ``labels`` maps edges onto ``[1, m]``.

    Returns the labels as an int64 array.
    """
    m = t.m
    if len(labels) != m:
        raise LabelingError(f"expected {m} labels, got {len(labels)}")
    arr = np.asarray(labels, dtype=np.int64)
    if m == 0:
        return arr
    bad = np.flatnonzero((arr < 1) | (arr > m))
    if bad.size:
        eid = int(bad[0])
        x = int(arr[eid])
        what = "is unlabeled" if x == 0 else f"has label {x} outside [1, {m}]"
        raise LabelingError(f"edge {eid} {what}")
    counts = np.bincount(arr, minlength=m + 1)
    if counts.max() > 1:
        raise LabelingError(f"label {int(np.argmax(counts))} used more than once")
    return arr


def vertex_sums(t: Tree, labels: Sequence[int], cls: VertexClassification | None = None) -> SumReport:
    """Exact integer vertex sums, with duplicate witnesses found by sorting."""
    arr = check_bijection(t, labels)
    # float64 bincount is exact while every sum stays below 2**53
    ends = t.edge_array
    w = arr.astype(np.float64)
    sums_arr = (
        np.bincount(ends[:, 0], weights=w, minlength=t.n) + np.bincount(ends[:, 1], weights=w, minlength=t.n)
    ).astype(np.int64)
    order = np.argsort(sums_arr, kind="stable")
    ordered = sums_arr[order]
    clash = np.flatnonzero(ordered[1:] == ordered[:-1])
    duplicates = [(int(order[j]), int(order[j + 1]), int(ordered[j])) for j in clash]
    sums = sums_arr.tolist()
    report = SumReport(sums, not duplicates, duplicates)
    if cls is not None:
        for name, members in (("V1", cls.v1), ("V2", cls.v2), ("V3", cls.v3)):
            if members:
                vals = sums_arr[members]
                report.class_intervals[name] = (int(vals.min()), int(vals.max()))
            else:
                report.class_intervals[name] = None
    return report


def is_antimagic_labeling(t: Tree, labels: Sequence[int]) -> bool:
    """True iff ``labels`` is a bijection onto ``[1, m]`` with distinct vertex sums.

    A label list of the wrong length is a caller error and raises.
    """
    if len(labels) != t.m:
        raise LabelingError(f"expected {t.m} labels, got {len(labels)}")
    try:
        return vertex_sums(t, labels).distinct
    except LabelingError:
        return False


def class_bounds(m: int, p: int, u: int) -> dict[str, tuple[int, int | None]]:
    """Closed intervals that hold the vertex sums of each class (None = unbounded)."""
    return {
        "V1": (1, m - p // 2 + 1),
        "V2": (m - p // 2 + 2, m + (p + 1) // 2 + u),
        "V3": (m + (p + 1) // 2 + u + 2, None),
    }


def check_intervals(
    report: SumReport, cls: VertexClassification, m: int, p: int, u: int
) -> tuple[bool, list[str]]:
    """Check each class's sums against its interval and the classes' mutual disjointness.

    Only meaningful for labelings built by :func:`antimagic.labeler.label`.
    """
    violations: list[str] = []
    sums = report.sums
    observed: dict[str, tuple[int, int]] = {}
    for name, members in (("V1", cls.v1), ("V2", cls.v2), ("V3", cls.v3)):
        lo, hi = class_bounds(m, p, u)[name]
        for v in members:
            s = sums[v]
            if s < lo or (hi is not None and s > hi):
                violations.append(f"{name}: vertex {v} has sum {s} outside [{lo}, {'inf' if hi is None else hi}]")
        if members:
            vals = [sums[v] for v in members]
            observed[name] = (min(vals), max(vals))
    names = list(observed)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            (alo, ahi), (blo, bhi) = observed[a], observed[b]
            if alo <= bhi and blo <= ahi:
                violations.append(f"observed ranges of {a} [{alo}, {ahi}] and {b} [{blo}, {bhi}] overlap")
    return not violations, violations
