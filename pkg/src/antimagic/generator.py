"""Caterpillar instances: seeded random ones and exhaustive small-order sweeps.

Vertex ids are spine-first: ``v_i`` is vertex ``i`` for ``0 <= i <= p`` and
the pathedges are edges ``0..p-1``. Legs follow as vertices ``p+1, p+2, ...``.
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from .tree import Tree

ENUMERATION_CAP = 22


def caterpillar_from_legs(p: int, attach: Sequence[int]) -> Tree:
    """Spine of length ``p`` plus one leg at spine index ``attach[j]`` for each ``j``."""
    if p < 2:
        raise ValueError(f"spine length must be at least 2, got {p}")
    edges = [(i - 1, i) for i in range(1, p + 1)]
    for j, k in enumerate(attach):
        if not 1 <= k <= p - 1:
            raise ValueError(f"legs attach to spine indices 1..{p - 1}, got {k}")
        edges.append((k, p + 1 + j))
    return Tree(p + 1 + len(attach), tuple(edges))


def caterpillar_from_counts(counts: Sequence[int]) -> Tree:
    """Caterpillar with ``counts[i - 1]`` legs on ``v_i``; the spine has ``len(counts) + 1`` edges."""
    attach = [i for i, c in enumerate(counts, start=1) for _ in range(c)]
    return caterpillar_from_legs(len(counts) + 1, attach)


def random_caterpillar(p: int, leg_budget: int, seed: int | None) -> Tree:
    """Spine of length ``p`` with ``leg_budget`` legs on uniformly drawn internal vertices.

    The generator is Python's ``random.Random(seed)`` (MT19937); leg ``j``
    attaches to ``v_k`` with ``k = rng.randrange(1, p)``, drawn in order.
    """
    if p < 2:
        raise ValueError(f"spine length must be at least 2, got {p}")
    if leg_budget < 0:
        raise ValueError(f"leg budget must be non-negative, got {leg_budget}")
    rng = random.Random(seed)
    return caterpillar_from_legs(p, [rng.randrange(1, p) for _ in range(leg_budget)])


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # lexicographically descending
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_caterpillars(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Tree]:
    """Every caterpillar of order ``n`` at least once, up to spine reflection.

    For each spine length ``p`` and each leg-count composition, the
    composition is skipped when its reversal was emitted earlier.
    """
    if n < 3:
        raise ValueError(f"caterpillars have order at least 3, got {n}")
    if n > cap:
        raise ValueError(f"order {n} exceeds the enumeration cap {cap}")
    for p in range(2, n):
        for counts in _compositions(n - 1 - p, p - 1):
            if counts >= counts[::-1]:
                yield caterpillar_from_counts(counts)
