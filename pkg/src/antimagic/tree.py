"""Trees, caterpillar recognition, spine extraction and bipartitions.

Vertices are dense integer ids ``0..n-1``; edges are identified by their
position in ``Tree.edges``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import breadth_first_order, connected_components, shortest_path

from .errors import InvalidTreeError, NotACaterpillarError, ParseError


@dataclass(frozen=True)
class Tree:
    """An undirected simple tree on vertices ``0..n-1``.

    Construction validates the edge list; an invalid one raises
    :class:`InvalidTreeError`.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        n = self.n
        if n < 1:
            raise InvalidTreeError(f"a tree needs at least one vertex, got n={n}")
        if len(edges) != n - 1:
            raise InvalidTreeError(f"a tree on {n} vertices has {n - 1} edges, got {len(edges)}")
        if not edges:
            return
        arr = self.edge_array
        u, v = arr[:, 0], arr[:, 1]
        bad = np.flatnonzero((arr < 0).any(axis=1) | (arr >= n).any(axis=1))
        if bad.size:
            e = int(bad[0])
            raise InvalidTreeError(f"edge {e} {edges[e]}: vertex id out of range [0, {n - 1}]")
        loops = np.flatnonzero(u == v)
        if loops.size:
            raise InvalidTreeError(f"edge {int(loops[0])}: self-loop at {edges[int(loops[0])][0]}")
        keys = np.minimum(u, v) * n + np.maximum(u, v)
        order = np.argsort(keys, kind="stable")
        dup = np.flatnonzero(keys[order][1:] == keys[order][:-1])
        if dup.size:
            e = int(order[dup[0] + 1])
            raise InvalidTreeError(f"edge {e}: duplicate edge {set(edges[e])}")
        # n-1 edges plus connectivity rules out cycles
        if connected_components(self.csgraph, directed=False, return_labels=False) != 1:
            raise InvalidTreeError("edge list is disconnected")

    @property
    def m(self) -> int:
        return self.n - 1

    @cached_property
    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.int64).reshape(-1, 2)

    @cached_property
    def csgraph(self) -> sp.csr_matrix:
        # both directions stored, so searches can skip scipy's symmetrisation
        arr = self.edge_array
        rows = np.concatenate([arr[:, 0], arr[:, 1]])
        cols = np.concatenate([arr[:, 1], arr[:, 0]])
        ones = np.ones(len(rows), dtype=np.int8)
        return sp.csr_matrix((ones, (rows, cols)), shape=(self.n, self.n))

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edge_array.ravel(), minlength=self.n)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adjacency: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        return adjacency

    @cached_property
    def incidence(self) -> list[list[int]]:
        incidence: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            incidence[u].append(eid)
            incidence[v].append(eid)
        return incidence

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        return w if u == v else u


@dataclass(frozen=True, eq=False)
class Spine:
    """A longest path ``v_0..v_p`` of a caterpillar together with its legs.

    ``pathedge_ids[i - 1]`` is the id of ``e_i = {v_(i-1), v_i}``. Legs are
    stored grouped by spine index in ascending leaf order: the legs of
    ``v_i`` are ``leg_edge[leg_start[i]:leg_start[i + 1]]`` with leaves
    ``leg_leaf`` at the same positions. ``v_0`` and ``v_p`` have no legs.
    """

    path: list[int]
    pathedge_ids: list[int]
    leg_start: np.ndarray
    leg_edge: np.ndarray
    leg_leaf: np.ndarray

    @property
    def p(self) -> int:
        return len(self.path) - 1

    @cached_property
    def leg_counts(self) -> np.ndarray:
        return np.diff(self.leg_start)

    @cached_property
    def leg_owner(self) -> np.ndarray:
        """Spine index of each leg."""
        return np.repeat(np.arange(self.p + 1), self.leg_counts)

    def legs(self, i: int) -> list[tuple[int, int]]:
        """``(edge_id, leaf)`` pairs of the legs on ``v_i``."""
        lo, hi = self.leg_start[i], self.leg_start[i + 1]
        return list(zip(self.leg_edge[lo:hi].tolist(), self.leg_leaf[lo:hi].tolist()))

    def degree(self, i: int) -> int:
        """Degree of the spine vertex ``v_i`` in the tree."""
        if i == 0 or i == self.p:
            return 1
        return 2 + int(self.leg_counts[i])


@dataclass(frozen=True)
class Bipartition:
    class_of: list[int]  # 0 = class A, 1 = class B

    @property
    def a(self) -> list[int]:
        return [v for v, c in enumerate(self.class_of) if c == 0]

    @property
    def b(self) -> list[int]:
        return [v for v, c in enumerate(self.class_of) if c == 1]


def parse_edge_list(text: str, n: int | None = None) -> Tree:
    """Parse the whitespace-separated edge-list format into a :class:`Tree`.

    ``#`` comment lines and blank lines are skipped. If ``n`` is given, ids
    must lie in ``[0, n-1]``; otherwise ``n`` is one more than the largest id
    and every id below it must occur.
    """
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    seen: dict[tuple[int, int], int] = {}
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex ids, got {len(tokens)} fields", lineno)
        try:
            u, v = int(tokens[0], 10), int(tokens[1], 10)
        except ValueError:
            raise ParseError(f"vertex ids must be base-10 integers: {line!r}", lineno) from None
        for x in (u, v):
            if x < 0 or (n is not None and x >= n):
                bound = "" if n is None else f" [0, {n - 1}]"
                raise ParseError(f"vertex id {x} out of range{bound}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge {{{u}, {v}}} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        ru, rv = find(u), find(v)
        if ru == rv:
            raise ParseError(f"edge {{{u}, {v}}} closes a cycle", lineno)
        parent[ru] = rv
        edges.append((u, v))
        lines.append(lineno)

    if not edges:
        if n == 1:
            return Tree(1, ())
        raise ParseError("empty edge list", None)
    if n is None:
        n = 1 + max(max(e) for e in edges)
    if len(parent) != n:
        missing = next(v for v in range(n) if v not in parent)
        raise ParseError(f"disconnected: vertex {missing} has no edges (ids must be dense 0..{n - 1})", None)
    root = find(0)
    for (u, _), lineno in zip(edges, lines):
        if find(u) != root:
            raise ParseError("disconnected: edge is not connected to vertex 0", lineno)
    return Tree(n, tuple(edges))


def serialize_edge_list(t: Tree) -> str:
    return "".join(f"{u} {v}\n" for u, v in t.edges)


def _bfs_order(adjacency: list[list[int]], source: int) -> list[int]:
    seen = [False] * len(adjacency)
    seen[source] = True
    order = [source]
    for u in order:
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
    return order


def _farthest(adjacency: list[list[int]], source: int) -> tuple[int, int, list[int]]:
    """BFS from ``source``; return (farthest vertex, distance, parent array).

    Ties on distance go to the smallest vertex id.
    """
    n = len(adjacency)
    dist = [-1] * n
    parent = [-1] * n
    dist[source] = 0
    queue = deque([source])
    best, best_d = source, 0
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] < 0:
                dist[w] = du
                parent[w] = u
                queue.append(w)
                if du > best_d or (du == best_d and w < best):
                    best, best_d = w, du
    return best, best_d, parent


def diameter(t: Tree) -> int:
    """Number of edges on a longest path, via a plain-Python double BFS sweep."""
    a, _, _ = _farthest(t.adjacency, 0)
    _, d, _ = _farthest(t.adjacency, a)
    return d


def caterpillar_rejection(t: Tree) -> str | None:
    """Return why ``t`` is not a caterpillar, or None if it is one."""
    if t.n < 3:
        return "order < 3"
    # Removing the leaves of a tree leaves a tree; it is a path iff every
    # remaining vertex keeps at most two remaining neighbours.
    arr, deg = t.edge_array, t.degrees
    inner = deg[arr] > 1
    both = inner[:, 0] & inner[:, 1]
    inner_deg = np.bincount(arr[both].ravel(), minlength=t.n)
    branch = np.flatnonzero(inner_deg > 2)
    if branch.size:
        v = int(branch[0])
        return f"vertex {v} has {int(inner_deg[v])} non-leaf neighbours, so removing leaves does not leave a path"
    return None


def is_caterpillar(t: Tree) -> bool:
    return caterpillar_rejection(t) is None


def _inner_path(t: Tree) -> np.ndarray:
    # non-leaf vertices of a caterpillar in path order, from the smaller-id end
    deg = t.degrees
    inner = deg > 1
    arr = t.edge_array
    both = inner[arr[:, 0]] & inner[arr[:, 1]]
    inner_deg = np.bincount(arr[both].ravel(), minlength=t.n)
    ends = np.flatnonzero(inner & (inner_deg <= 1))
    order = breadth_first_order(t.csgraph, int(ends[0]), directed=True, return_predecessors=False)
    # BFS from an end of the inner path reaches its vertices one level at a time
    return order[inner[order]]


def _first_max(dist: np.ndarray) -> int:
    return int(np.flatnonzero(dist == dist.max())[0])


def extract_spine(t: Tree) -> Spine:
    """Extract the canonical longest path of a caterpillar.

    Double sweep from vertex 0 with smallest-id tie breaking; the endpoint
    with the smaller id becomes ``v_0``. On a caterpillar every distance is
    the gap between positions along the non-leaf path plus one per leaf
    endpoint, so both sweeps are computed from those positions.
    """
    reason = caterpillar_rejection(t)
    if reason is not None:
        raise NotACaterpillarError(reason)
    inner_path = _inner_path(t)
    leaf = (t.degrees == 1).astype(np.int64)
    where = np.empty(t.n, dtype=np.int64)
    where[inner_path] = np.arange(inner_path.size)
    arr = t.edge_array
    # a leaf sits at the position of its only neighbour
    leaf_edges = np.flatnonzero(leaf[arr[:, 0]] | leaf[arr[:, 1]])
    lu, lv = arr[leaf_edges, 0], arr[leaf_edges, 1]
    tip = np.where(leaf[lu] == 1, lu, lv)
    where[tip] = where[np.where(leaf[lu] == 1, lv, lu)]

    def distances(s: int) -> np.ndarray:
        dist = np.abs(where - where[s]) + leaf + leaf[s]
        dist[s] = 0
        return dist

    a = _first_max(distances(0))
    b = _first_max(distances(a))
    # a and b are leaves because n >= 3
    ia, ib = int(where[a]), int(where[b])
    middle = inner_path[ia : ib + 1] if ia <= ib else inner_path[ib : ia + 1][::-1]
    path = np.concatenate([[a], middle, [b]])
    if path[-1] < path[0]:
        path = path[::-1]
    p = path.size - 1

    arr = t.edge_array
    pos = np.full(t.n, -1, dtype=np.int64)
    pos[path] = np.arange(p + 1)
    pu, pv = pos[arr[:, 0]], pos[arr[:, 1]]
    on_path = (pu >= 0) & (pv >= 0)
    pathedge_ids = np.empty(p, dtype=np.int64)
    pathedge_ids[np.minimum(pu, pv)[on_path]] = np.flatnonzero(on_path)

    leg_ids = np.flatnonzero(~on_path)
    at = np.maximum(pu, pv)[leg_ids]
    leaf = np.where(pu[leg_ids] >= 0, arr[leg_ids, 1], arr[leg_ids, 0])
    if leg_ids.size and ((at < 1).any() or (at > p - 1).any() or (t.degrees[leaf] != 1).any()):
        raise NotACaterpillarError("an edge off the longest path is not a leg")
    # group legs by spine index in linear time: COO -> CSR is a counting sort
    grouped = sp.coo_matrix((leg_ids, (at, leaf)), shape=(p + 1, t.n)).tocsr()
    grouped.sort_indices()
    return Spine(path.tolist(), pathedge_ids.tolist(), grouped.indptr.astype(np.int64),
                 grouped.data.astype(np.int64), grouped.indices.astype(np.int64))


def bipartition(t: Tree, spine: Spine | None = None) -> Bipartition:
    """Two-colour ``t`` by BFS-distance parity from ``v_0`` of ``spine`` (else vertex 0)."""
    root = spine.path[0] if spine is not None else 0
    if t.n == 1:
        return Bipartition([0])
    dist = shortest_path(t.csgraph, directed=True, unweighted=True, indices=root)
    return Bipartition((dist.astype(np.int64) % 2).tolist())
