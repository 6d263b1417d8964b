import random
from collections import deque

import pytest
from hypothesis import strategies as st

from antimagic.generator import caterpillar_from_legs, random_caterpillar
from antimagic.tree import Tree


def path_tree(n):
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def star(center, leaves):
    return Tree(len(leaves) + 1, tuple((center, x) for x in leaves))


# spine 0-1-2-3-4-5 with leaf 6 on vertex 1
SPINE5_ONE_LEG = caterpillar_from_legs(5, [1])
# spine 0-1-2-3-4 with leaves 5, 6 on vertex 1 and leaf 7 on vertex 3
SPINE4_THREE_LEGS = caterpillar_from_legs(4, [1, 1, 3])
K14 = star(1, [0, 2, 3, 4])
P3 = path_tree(3)
P4 = path_tree(4)


def bfs_dist(t, source):
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in t.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def brute_diameter(t):
    return max(max(bfs_dist(t, s).values()) for s in range(t.n))


def brute_sums(t, labels):
    sums = [0] * t.n
    for (u, v), x in zip(t.edges, labels):
        sums[u] += x
        sums[v] += x
    return sums


def acceptance_corpus(count=1000, seed=20240615):
    """(p, legs, seed) triples: spine up to 10^3, up to 10^3 legs."""
    rng = random.Random(seed)
    return [(rng.randint(2, 1000), rng.randint(0, 1000), rng.randrange(2**32)) for _ in range(count)]


@st.composite
def trees(draw, min_n=1, max_n=14):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    perm = draw(st.permutations(range(n)))
    edges = [(perm[i], perm[p]) for i, p in enumerate(parents, start=1)]
    return Tree(n, tuple(edges))


@st.composite
def caterpillars(draw, max_p=40, max_legs=40):
    p = draw(st.integers(2, max_p))
    attach = draw(st.lists(st.integers(1, p - 1), max_size=max_legs))
    return caterpillar_from_legs(p, attach)


@pytest.fixture(scope="session")
def corpus():
    return [random_caterpillar(p, legs, s) for p, legs, s in acceptance_corpus()]


@st.composite
def shuffled_caterpillars(draw, max_p=25, max_legs=25):
    """Caterpillars with vertex ids and edge order scrambled."""
    t = draw(caterpillars(max_p, max_legs))
    perm = draw(st.permutations(range(t.n)))
    edges = [(perm[u], perm[v]) for u, v in t.edges]
    edges = draw(st.permutations(edges))
    return Tree(t.n, tuple(edges))


_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion for the terminal summary."""

    def record(number, ok, detail):
        _CRITERIA[number] = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[number])
