import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antimagic.errors import InvariantViolation, NotACaterpillarError
from antimagic.invariants import (
    consecutive_sum_violations,
    heavy_vertex_violations,
    label_image_violations,
    pathedge_label_violations,
)
from antimagic.labeler import (
    closed_form_pathedge_label,
    label,
    run_step1,
    run_step2,
    run_step3,
    split_labels,
)
from antimagic.tree import extract_spine
from antimagic.verifier import classify_vertices, is_antimagic_labeling, vertex_sums

from conftest import SPINE5_ONE_LEG, SPINE4_THREE_LEGS, K14, P3, P4, brute_sums, caterpillars, path_tree, star


def naive_step1(t, spine):
    """Step 1 done literally: every k is searched on every E0 edge."""
    m, p = t.m, spine.p
    phi = {1: 1, 2: m - p // 2 + 1}
    if p % 2 == 0:
        phi[1], phi[2] = phi[2], phi[1]
    light_legs = {}
    for i in range(3, p + 1):
        phi[i] = phi[i - 2] + 1
        if (i - p) % 2 == 0:
            ks = [
                k
                for k in range(1, i - 2)
                if t.degree(spine.path[k]) == 3 and phi[i - 1] == phi[k] + phi[k + 1]
            ]
            assert len(ks) <= 1 and not set(ks) & set(light_legs)
            if ks:
                light_legs[ks[0]] = phi[i]
                phi[i] += 1
    return phi, light_legs


def _steps(t):
    spine = extract_spine(t)
    pool = split_labels(t.m, spine.p)
    labels, trace = run_step1(spine, pool)
    return spine, pool, labels, trace


@pytest.mark.parametrize(
    "m, p, low, high",
    [(6, 5, (1, 4), (5, 6)), (3, 3, (1, 2), (3, 3)), (4, 2, (1, 3), (4, 4))],
)
def test_split_labels(m, p, low, high):
    pool = split_labels(m, p)
    assert (pool.low[0], pool.low[-1]) == low
    assert (pool.high[0], pool.high[-1]) == high
    assert len(pool.low) == m - p // 2 and len(pool.high) == p // 2
    assert not any(pool.used)


@pytest.mark.parametrize("m, p", [(3, 4), (5, 1)])
def test_split_labels_rejects_bad_spine(m, p):
    with pytest.raises(ValueError):
        split_labels(m, p)


def test_step1_p4():
    _, _, labels, trace = _steps(P4)
    assert trace.pathedge_labels[1:] == [1, 3, 2]
    assert trace.light == [] and not any(trace.fired)


def test_step1_spine5_one_leg():
    spine, _, labels, trace = _steps(SPINE5_ONE_LEG)
    assert trace.pathedge_labels[1:] == [1, 5, 2, 6, 4]
    assert trace.fired[5] == 1 and trace.light == [1]
    assert trace.light_count[1:] == [0, 0, 0, 0, 1]
    assert labels[spine.legs(1)[0][0]] == 3


def test_step1_star():
    _, _, _, trace = _steps(K14)
    assert trace.pathedge_labels[1:] == [4, 1]
    assert trace.light == []


@pytest.mark.parametrize(
    "t, i, expected",
    [(SPINE5_ONE_LEG, 5, 4), (SPINE5_ONE_LEG, 2, 5), (P4, 3, 2)],
)
def test_closed_form_examples(t, i, expected):
    *_, trace = _steps(t)
    assert closed_form_pathedge_label(i, trace) == expected


def test_closed_form_index_range():
    *_, trace = _steps(P4)
    with pytest.raises(IndexError):
        closed_form_pathedge_label(0, trace)
    with pytest.raises(IndexError):
        closed_form_pathedge_label(4, trace)


def test_steps_2_and_3_star():
    spine, pool, labels, trace = _steps(K14)
    cls = classify_vertices(spine, trace)
    run_step2(spine, cls, pool, labels)
    assert labels[K14.edges.index((1, 3))] == 2
    assert labels[K14.edges.index((1, 4))] == 0
    run_step3(spine, cls, pool, labels)
    assert labels[K14.edges.index((1, 4))] == 3


def test_steps_2_and_3_spine4_three_legs():
    spine, pool, labels, trace = _steps(SPINE4_THREE_LEGS)
    cls = classify_vertices(spine, trace)
    run_step2(spine, cls, pool, labels)
    leg = dict(zip(spine.leg_leaf.tolist(), spine.leg_edge.tolist()))
    assert labels[leg[5]] == 3
    assert labels[leg[6]] == 0 and labels[leg[7]] == 0
    run_step3(spine, cls, pool, labels)
    assert labels[leg[7]] == 4 and labels[leg[6]] == 5


def test_step3_is_identity_without_heavy_vertices():
    spine, pool, labels, trace = _steps(SPINE5_ONE_LEG)
    cls = classify_vertices(spine, trace)
    before = list(labels)
    run_step2(spine, cls, pool, labels)
    run_step3(spine, cls, pool, labels)
    assert labels.tolist() == before and labels.all()


@pytest.mark.parametrize(
    "t, labels, sums",
    [
        (SPINE5_ONE_LEG, [1, 5, 2, 6, 4, 3], [1, 9, 7, 8, 10, 4, 3]),
        (SPINE4_THREE_LEGS, [6, 1, 7, 2, 3, 5, 4], [6, 15, 8, 13, 2, 3, 5, 4]),
        (P3, [2, 1], [2, 3, 1]),
        (P4, [1, 3, 2], [1, 4, 5, 2]),
        (K14, [4, 1, 2, 3], [4, 10, 1, 2, 3]),
    ],
)
def test_label_hand_traced(t, labels, sums):
    result = label(t)
    assert result.labels == labels
    assert brute_sums(t, result.labels) == sums


def test_label_rejects_non_caterpillar():
    with pytest.raises(NotACaterpillarError):
        label(path_tree(2))


def test_step3_detects_count_mismatch():
    spine, pool, labels, trace = _steps(K14)
    cls = classify_vertices(spine, trace)
    with pytest.raises(InvariantViolation):
        run_step3(spine, cls, pool, labels)


@settings(max_examples=300, deadline=None)
@given(caterpillars(max_p=60, max_legs=80))
def test_step1_matches_literal_search(t):
    spine, _, labels, trace = _steps(t)
    phi, light_legs = naive_step1(t, spine)
    assert trace.pathedge_labels[1:] == [phi[i] for i in range(1, spine.p + 1)]
    assert sorted(trace.light) == sorted(light_legs)
    for k, eid in zip(trace.light, trace.light_legs):
        assert labels[eid] == light_legs[k]


@settings(max_examples=300, deadline=None)
@given(caterpillars(max_p=60, max_legs=80))
def test_construction_properties(t):
    result = label(t)
    assert sorted(result.labels) == list(range(1, t.m + 1))
    sums = brute_sums(t, result.labels)
    assert len(set(sums)) == t.n
    trace = result.trace
    assert all(a <= b for a, b in zip(trace.light_count[1:], trace.light_count[2:]))
    assert all(trace.in_low_class(i) for i in range(1, trace.p + 1) if trace.fired[i])
    assert all(result.spine.degree(k) == 3 for k in trace.light)
    assert pathedge_label_violations(result) == []
    assert label_image_violations(result) == []
    assert consecutive_sum_violations(result) == []
    assert heavy_vertex_violations(t, result, sums) == []


@settings(max_examples=150, deadline=None)
@given(caterpillars(max_p=40, max_legs=60), st.integers(0, 2**32 - 1))
def test_random_step2_stays_antimagic(t, seed):
    result = label(t, seed=seed)
    assert is_antimagic_labeling(t, result.labels)
    assert label_image_violations(result) == []
    assert heavy_vertex_violations(t, result, vertex_sums(t, result.labels).sums) == []


def test_random_step2_is_seed_deterministic():
    assert label(SPINE4_THREE_LEGS, seed=7).labels == label(SPINE4_THREE_LEGS, seed=7).labels
    seen = {tuple(label(SPINE4_THREE_LEGS, seed=s).labels) for s in range(30)}
    assert len(seen) > 1


def test_center_sum_is_exact_on_a_large_star():
    m = 200_000
    t = star(0, list(range(1, m + 1)))
    result = label(t)
    assert vertex_sums(t, result.labels).sums[0] == m * (m + 1) // 2
