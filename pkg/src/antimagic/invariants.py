"""Runtime checks of the structural facts the labeling construction guarantees.

Each ``*_violations`` function returns a list of human-readable problems;
an empty list means the property holds.
"""

from __future__ import annotations

from .labeler import LabelingResult, closed_form_pathedge_label
from .tree import Tree
from .verifier import check_intervals, vertex_sums


def pathedge_label_violations(result: LabelingResult) -> list[str]:
    trace = result.trace
    out = []
    for i in range(1, trace.p + 1):
        expected = closed_form_pathedge_label(i, trace)
        if trace.pathedge_labels[i] != expected:
            out.append(f"e_{i}: label {trace.pathedge_labels[i]}, closed form {expected}")
    return out


def _image_check(name: str, labels: list[int], lo: int, hi: int) -> list[str]:
    if sorted(labels) != list(range(lo, hi + 1)):
        return [f"{name} labels are not exactly [{lo}, {hi}]"]
    return []


def label_image_violations(result: LabelingResult) -> list[str]:
    """Low pathedges plus light legs, high pathedges, and all other legs each fill an interval."""
    labels, spine, trace = result.labels, result.spine, result.trace
    m, p, u = trace.m, trace.p, len(trace.light)
    low, high = [], []
    for i in range(1, p + 1):
        (low if trace.in_low_class(i) else high).append(labels[spine.pathedge_ids[i - 1]])
    low.extend(labels[e] for e in trace.light_legs)
    light_legs = set(trace.light_legs)
    rest = [labels[e] for e in spine.leg_edge.tolist() if e not in light_legs]
    ceil_half = (p + 1) // 2
    return (
        _image_check("E0 ∪ F0", low, 1, ceil_half + u)
        + _image_check("E1", high, m - p // 2 + 1, m)
        + _image_check("E2", rest, ceil_half + u + 1, m - p // 2)
    )


def consecutive_sum_violations(result: LabelingResult) -> list[str]:
    """Bounds and strict growth of φ(e_i) + φ(e_(i+1)), and growth of light-leg labels."""
    trace, labels = result.trace, result.labels
    m, p, u = trace.m, trace.p, len(trace.light)
    phi = trace.pathedge_labels
    lo, hi = m - p // 2 + 2, m + (p + 1) // 2 + u
    out = []
    prev = None
    for i in range(1, p):
        g = phi[i] + phi[i + 1]
        if not lo <= g <= hi:
            out.append(f"φ(e_{i}) + φ(e_{i + 1}) = {g} outside [{lo}, {hi}]")
        if prev is not None and g <= prev:
            out.append(f"consecutive sum at {i} ({g}) does not exceed the one before ({prev})")
        prev = g
    leg_of = dict(zip(trace.light, trace.light_legs))
    ordered = [labels[leg_of[k]] for k in sorted(leg_of)]
    for a, b in zip(ordered, ordered[1:]):
        if a >= b:
            out.append(f"light leg labels not increasing along the spine: {a} then {b}")
            break
    return out


def heavy_vertex_violations(t: Tree, result: LabelingResult, sums: list[int]) -> list[str]:
    labels, spine, trace, cls = result
    m, p, u = trace.m, trace.p, len(trace.light)
    phi = trace.pathedge_labels
    out = []
    for i in cls.heavy:
        v = spine.path[i]
        if spine.degree(i) == 3:
            if phi[i] + phi[i + 1] < m + 1:
                out.append(f"heavy degree-3 v_{i}: pathedge sum {phi[i] + phi[i + 1]} < m + 1")
        elif sums[v] < m + (p + 1) // 2 + 2 * u + 5:
            out.append(f"heavy v_{i} of degree {spine.degree(i)}: sum {sums[v]} below bound")
    by_last_leg = sorted(cls.heavy, key=lambda i: labels[spine.legs(i)[-1][0]])
    final = [sums[spine.path[i]] for i in by_last_leg]
    for a, b in zip(final, final[1:]):
        if a >= b:
            out.append(f"heavy sums not increasing in step-3 order: {a} then {b}")
            break
    return out


def all_violations(t: Tree, result: LabelingResult) -> list[str]:
    """Every check above plus antimagicness and the class intervals."""
    trace, cls = result.trace, result.classification
    report = vertex_sums(t, result.labels, cls)
    out = []
    if not report.distinct:
        out.extend(f"vertices {a} and {b} share sum {s}" for a, b, s in report.duplicates)
    out += pathedge_label_violations(result)
    out += label_image_violations(result)
    out += consecutive_sum_violations(result)
    out += heavy_vertex_violations(t, result, report.sums)
    _, interval_problems = check_intervals(report, cls, trace.m, trace.p, len(trace.light))
    return out + interval_problems
