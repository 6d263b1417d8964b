"""Constructive antimagic labeling of caterpillars.

The spine ``v_0..v_p`` is a longest path. Pathedges ``e_i`` with
``i ≡ p (mod 2)`` form the low class E0 and take labels from the low pool
``[1, m - p//2]``; the others form E1 and take the top ``p//2`` labels.
Step 1 labels every pathedge and, whenever the label about to go on an
E0 edge ``e_i`` finds ``φ(e_(i-1)) = φ(e_k) + φ(e_(k+1))`` for a degree-3
spine vertex ``v_k`` with ``k <= i - 3``, first spends one low label on the
single leg of ``v_k``. Such ``v_k`` are *light*; every other vertex of
degree at least 3 is *heavy*. Step 2 labels all but one leg of each heavy
vertex from the low pool and Step 3 hands the remaining low labels, in
increasing order, to the last legs of the heavy vertices sorted by their
partial vertex sums.

Partial labelings are int64 arrays indexed by edge id, with 0 meaning
"not yet labeled"; :func:`label` returns a plain list.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import InvariantViolation, LabelingError
from .tree import Spine, Tree, extract_spine
from .verifier import VertexClassification, classify_vertices, vertex_sums

Labeling = np.ndarray


@dataclass
class LabelPool:
    """Labels ``1..m`` split into the low pool L0 and the high pool L1."""

    m: int
    p: int
    used: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.used = np.zeros(self.m + 1, dtype=bool)

    @property
    def low(self) -> range:
        return range(1, self.m - self.p // 2 + 1)

    @property
    def high(self) -> range:
        return range(self.m - self.p // 2 + 1, self.m + 1)

    def take(self, label: int) -> int:
        if not 1 <= label <= self.m:
            raise InvariantViolation(f"label {label} outside [1, {self.m}]")
        if self.used[label]:
            raise InvariantViolation(f"label {label} used twice")
        self.used[label] = True
        return label

    def take_many(self, labels: np.ndarray) -> np.ndarray:
        """Mark a batch of distinct labels as used and return them."""
        labels = np.asarray(labels, dtype=np.int64)
        if labels.size == 0:
            return labels
        if labels.min() < 1 or labels.max() > self.m:
            raise InvariantViolation(f"a label lies outside [1, {self.m}]")
        if self.used[labels].any() or np.unique(labels).size != labels.size:
            raise InvariantViolation("a label is used twice")
        self.used[labels] = True
        return labels

    def unused_low(self) -> np.ndarray:
        top = self.m - self.p // 2
        return np.flatnonzero(~self.used[1 : top + 1]) + 1


def split_labels(m: int, p: int) -> LabelPool:
    if p < 2 or p > m:
        raise ValueError(f"need 2 <= p <= m, got m={m}, p={p}")
    return LabelPool(m, p)


@dataclass
class Step1Trace:
    """What Step 1 did, indexed by pathedge number ``i`` (slot 0 unused).

    ``fired[i]`` is the ``k`` whose leg was labeled while handling ``e_i``
    (0 if none) and ``light_count[i]`` is the number of light vertices after
    iteration ``i``. ``light`` lists the light spine indices in firing order
    and ``light_legs`` their leg edge ids.
    """

    m: int
    p: int
    pathedge_labels: list[int]
    fired: list[int]
    light_count: list[int]
    light: list[int]
    light_legs: list[int]

    def in_low_class(self, i: int) -> bool:
        return (self.p - i) % 2 == 0


def run_step1(spine: Spine, pool: LabelPool) -> tuple[Labeling, Step1Trace]:
    p, m = spine.p, pool.m
    if p != pool.p:
        raise ValueError(f"pool was split for p={pool.p}, spine has p={p}")
    counts = spine.leg_counts.tolist()
    leg_start = spine.leg_start
    leg_edge = spine.leg_edge
    labels = np.zeros(m, dtype=np.int64)
    fired = [0] * (p + 1)
    light: list[int] = []
    light_legs: list[int] = []

    # E1 labels never move: e_i gets m - p//2 + ceil(i/2)
    idx = np.arange(p + 1)
    phi_arr = np.where((p - idx) % 2 == 0, 0, m - p // 2 + (idx + 1) // 2)
    phi_arr[0] = 0
    phi = phi_arr.tolist()
    # the first E0 edge starts the low labels
    phi[1 if p % 2 else 2] = 1

    # Consecutive sums phi[k] + phi[k+1] strictly increase in k, and so do
    # the E1 targets phi[i-1]; one forward cursor serves every query.
    k = 1
    for i in range(4 - p % 2, p + 1, 2):
        cur = phi[i - 2] + 1
        target = phi[i - 1]
        limit = i - 3
        while k <= limit and phi[k] + phi[k + 1] < target:
            k += 1
        if k <= limit and phi[k] + phi[k + 1] == target and counts[k] == 1:
            if k + 1 <= limit and phi[k + 1] + phi[k + 2] == target:
                raise InvariantViolation(f"Q({i}) matches both k={k} and k={k + 1}")
            leg = int(leg_edge[leg_start[k]])
            if labels[leg]:
                raise InvariantViolation(f"Q({i}) matched k={k} whose leg is already labeled")
            labels[leg] = pool.take(cur)
            cur += 1
            fired[i] = k
            light.append(k)
            light_legs.append(leg)
        phi[i] = cur

    light_count = np.cumsum(np.asarray(fired) > 0).tolist()
    path_ids = np.asarray(spine.pathedge_ids, dtype=np.int64)
    labels[path_ids] = pool.take_many(np.asarray(phi[1:], dtype=np.int64))
    return labels, Step1Trace(m, p, phi, fired, light_count, light, light_legs)


def closed_form_pathedge_label(i: int, trace: Step1Trace) -> int:
    """Label of ``e_i`` predicted from its class and the light count ``|U_i|``."""
    p, m = trace.p, trace.m
    if not 1 <= i <= p:
        raise IndexError(f"pathedge index {i} outside [1, {p}]")
    half = (i + 1) // 2
    if trace.in_low_class(i):
        return half + trace.light_count[i]
    return m - p // 2 + half


def run_step2(
    spine: Spine,
    cls: VertexClassification,
    pool: LabelPool,
    labels: Labeling,
    seed: int | None = None,
) -> Labeling:
    """Label every leg of each heavy vertex except its last (highest leaf id).

    With ``seed=None`` the smallest unused low labels are handed out in
    order. Otherwise each leg draws uniformly from the unused low labels
    using ``random.Random(seed)`` (MT19937): ``randrange`` picks a position
    in the remaining pool, which is then swap-removed.
    """
    free = pool.unused_low()
    heavy_mask = np.zeros(spine.p + 1, dtype=bool)
    heavy_mask[cls.heavy] = True
    is_last = np.zeros(spine.leg_edge.size, dtype=bool)
    is_last[spine.leg_start[1:][spine.leg_counts > 0] - 1] = True
    eids = spine.leg_edge[heavy_mask[spine.leg_owner] & ~is_last]
    if eids.size > free.size:
        raise InvariantViolation("low label pool exhausted in step 2")
    if seed is None:
        chosen = free[: eids.size]
    else:
        rng = random.Random(seed)
        pool_left = free.tolist()
        picks = []
        for _ in range(eids.size):
            j = rng.randrange(len(pool_left))
            pool_left[j], pool_left[-1] = pool_left[-1], pool_left[j]
            picks.append(pool_left.pop())
        chosen = np.asarray(picks, dtype=np.int64)
    if labels[eids].any():
        raise InvariantViolation("a step 2 leg is already labeled")
    labels[eids] = pool.take_many(chosen)
    return labels


def run_step3(spine: Spine, cls: VertexClassification, pool: LabelPool, labels: Labeling) -> Labeling:
    """Give the remaining low labels to the heavy vertices' last legs by partial sum."""
    heavy = np.asarray(cls.heavy, dtype=np.int64)
    lab = labels
    path_ids = np.asarray(spine.pathedge_ids, dtype=np.int64)
    leg_sum = np.bincount(spine.leg_owner, weights=lab[spine.leg_edge], minlength=spine.p + 1)
    partial = lab[path_ids[heavy - 1]] + lab[path_ids[heavy]] + leg_sum[heavy].astype(np.int64)
    # heavy is ascending and the sort is stable, so ties keep spine order
    order = np.argsort(partial, kind="stable")
    free = pool.unused_low()
    if free.size != heavy.size:
        raise InvariantViolation(f"{heavy.size} heavy vertices but {free.size} unused labels")
    last = spine.leg_edge[spine.leg_start[heavy[order] + 1] - 1]
    if labels[last].any():
        raise InvariantViolation("a last leg is already labeled")
    labels[last] = pool.take_many(free)
    return labels


class LabelingResult(NamedTuple):
    labels: Labeling
    spine: Spine
    trace: Step1Trace
    classification: VertexClassification


def label(t: Tree, seed: int | None = None) -> LabelingResult:
    """Antimagic labeling of the caterpillar ``t``.

    ``seed`` selects the random variant of Step 2; None keeps it
    deterministic. The result is checked before it is returned and an
    :class:`InvariantViolation` is raised if it is not antimagic.
    """
    spine = extract_spine(t)
    pool = split_labels(t.m, spine.p)
    labels, trace = run_step1(spine, pool)
    cls = classify_vertices(spine, trace)
    run_step2(spine, cls, pool, labels, seed)
    run_step3(spine, cls, pool, labels)
    try:
        report = vertex_sums(t, labels)
    except LabelingError as exc:
        raise InvariantViolation(f"labeling is not a bijection: {exc}") from exc
    if not report.distinct:
        u, v, s = report.duplicates[0]
        raise InvariantViolation(f"vertices {u} and {v} share vertex sum {s}")
    return LabelingResult(labels.tolist(), spine, trace, cls)
