"""Antimagic orientations of bipartite graphs from antimagic labelings.

Directing every edge from class A to class B turns vertex sums into
oriented sums ``-s(v)`` on A and ``+s(v)`` on B, so distinct sums stay
distinct and the two classes cannot collide (all sums are positive).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LabelingError
from .tree import Bipartition, Tree, bipartition, extract_spine, is_caterpillar
from .verifier import is_antimagic_labeling


@dataclass(frozen=True)
class OrientedLabeling:
    n: int
    arcs: list[tuple[int, int]]  # (tail, head), indexed by edge id
    labels: list[int]


def orient_and_label(t: Tree, labels: Sequence[int], parts: Bipartition | None = None) -> OrientedLabeling:
    """Direct every edge from class A to class B, keeping ``labels``.

    Without ``parts`` the classes come from BFS parity, rooted at the spine's
    ``v_0`` for caterpillars and at vertex 0 otherwise.
    """
    if not is_antimagic_labeling(t, labels):
        raise LabelingError("labeling is not antimagic")
    if parts is None:
        parts = bipartition(t, extract_spine(t) if is_caterpillar(t) else None)
    cls = parts.class_of
    arcs = [(u, v) if cls[u] == 0 else (v, u) for u, v in t.edges]
    return OrientedLabeling(t.n, arcs, list(labels))


def oriented_sums(ol: OrientedLabeling) -> list[int]:
    """Incoming minus outgoing label sum at each vertex."""
    sums = [0] * ol.n
    for (tail, head), x in zip(ol.arcs, ol.labels):
        sums[head] += x
        sums[tail] -= x
    return sums


def verify_oriented_sums(ol: OrientedLabeling) -> bool:
    sums = oriented_sums(ol)
    return len(set(sums)) == len(sums)
