"""Exhaustive backtracking search for antimagic labelings of small graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OracleBudgetExceeded, OracleLimitError
from .labeler import label
from .tree import Tree
from .verifier import is_antimagic_labeling

DEFAULT_LIMIT = 10
DEFAULT_BUDGET = 5_000_000


def brute_force_antimagic(
    t: Tree, limit_m: int = DEFAULT_LIMIT, budget: int | None = DEFAULT_BUDGET
) -> list[int] | None:
    """Lexicographically first antimagic labeling in edge-id order, or None.

    Edges are labeled in id order, smallest free label first. A branch is
    cut as soon as a vertex whose edges are all labeled repeats the sum of
    another completed vertex. ``budget`` bounds the number of label
    placements tried.
    """
    m = t.m
    if m > limit_m:
        raise OracleLimitError(f"{m} edges exceeds the oracle limit of {limit_m}")
    edges = t.edges
    remaining = [len(nbrs) for nbrs in t.adjacency]
    sums = [0] * t.n
    done: set[int] = set()
    labels = [0] * m
    free = [True] * (m + 1)
    expansions = 0

    def search(e: int) -> bool:
        nonlocal expansions
        if e == m:
            return True
        u, v = edges[e]
        for x in range(1, m + 1):
            if not free[x]:
                continue
            expansions += 1
            if budget is not None and expansions > budget:
                raise OracleBudgetExceeded(f"gave up after {budget} placements")
            free[x] = False
            labels[e] = x
            sums[u] += x
            sums[v] += x
            remaining[u] -= 1
            remaining[v] -= 1
            closed = []
            ok = True
            for w in (u, v):
                if remaining[w] == 0:
                    if sums[w] in done:
                        ok = False
                        break
                    done.add(sums[w])
                    closed.append(w)
            if ok and search(e + 1):
                return True
            for w in closed:
                done.discard(sums[w])
            sums[u] -= x
            sums[v] -= x
            remaining[u] += 1
            remaining[v] += 1
            free[x] = True
        labels[e] = 0
        return False

    return labels if search(0) else None


@dataclass
class OracleComparison:
    algorithm: list[int]
    oracle: list[int] | None
    algorithm_ok: bool
    oracle_ok: bool

    @property
    def agree(self) -> bool:
        return self.algorithm_ok and self.oracle_ok


def compare_with_algorithm(
    t: Tree, limit_m: int = DEFAULT_LIMIT, budget: int | None = DEFAULT_BUDGET
) -> OracleComparison:
    """Label ``t`` with the construction and with the brute-force search; check both."""
    ours = label(t).labels
    theirs = brute_force_antimagic(t, limit_m, budget)
    return OracleComparison(
        algorithm=ours,
        oracle=theirs,
        algorithm_ok=is_antimagic_labeling(t, ours),
        oracle_ok=theirs is not None and is_antimagic_labeling(t, theirs),
    )
