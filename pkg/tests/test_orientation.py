import pytest
from hypothesis import given, settings

from antimagic.errors import LabelingError
from antimagic.labeler import label
from antimagic.orientation import orient_and_label, oriented_sums, verify_oriented_sums
from antimagic.tree import bipartition
from antimagic.verifier import vertex_sums

from conftest import SPINE5_ONE_LEG, K14, P4, shuffled_caterpillars, trees


def test_p4():
    ol = orient_and_label(P4, [1, 3, 2])
    assert ol.arcs == [(0, 1), (2, 1), (2, 3)]
    assert oriented_sums(ol) == [-1, 4, -5, 2]
    assert verify_oriented_sums(ol)


def test_star_points_at_center():
    ol = orient_and_label(K14, label(K14).labels)
    assert all(head == 1 for _, head in ol.arcs)
    assert oriented_sums(ol) == [-4, 10, -1, -2, -3]
    assert verify_oriented_sums(ol)


def test_spine5_one_leg_parity():
    ol = orient_and_label(SPINE5_ONE_LEG, label(SPINE5_ONE_LEG).labels)
    assert all(tail % 2 == 0 and head % 2 == 1 for tail, head in ol.arcs)


def test_rejects_non_antimagic():
    with pytest.raises(LabelingError):
        orient_and_label(P4, [2, 1, 3])


@settings(max_examples=200, deadline=None)
@given(shuffled_caterpillars())
def test_caterpillar_orientations_are_antimagic(t):
    r = label(t)
    ol = orient_and_label(t, r.labels)
    assert verify_oriented_sums(ol)
    cls = bipartition(t, r.spine).class_of
    assert cls[r.spine.path[0]] == 0
    sums = vertex_sums(t, r.labels).sums
    assert oriented_sums(ol) == [s if cls[v] else -s for v, s in enumerate(sums)]


@given(trees(min_n=3, max_n=8))
def test_any_antimagic_labeling_orients(t):
    from antimagic.oracle import brute_force_antimagic

    found = brute_force_antimagic(t)
    if found is not None:
        assert verify_oriented_sums(orient_and_label(t, found))
