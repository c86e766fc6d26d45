import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seedgrow import GridDomain, Neighborhood, contains, dilate, erode, neighbors, reachable, standard_neighborhood

LINE = Neighborhood([(-1,), (1,)])
V4 = standard_neighborhood(2, 4)
V8 = standard_neighborhood(2, 8)


def test_contains():
    line = GridDomain.full([7])
    assert contains(line, (3,))
    assert not contains(line, (7,))
    assert not contains(line, (-1,))
    mask = np.ones((3, 3), bool)
    mask[1, 1] = False
    assert not contains(GridDomain(mask), (1, 1))
    assert contains(GridDomain(mask), (0, 1))


def test_contains_dimension_mismatch():
    with pytest.raises(ValueError):
        contains(GridDomain.full([7]), (1, 2))


def test_neighbors_order():
    assert neighbors((3,), LINE) == [(2,), (4,)]
    assert neighbors((0, 0), V4) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    around = neighbors((1, 1), V8)
    assert len(around) == 8
    assert set(around) == {(r, c) for r in range(3) for c in range(3)} - {(1, 1)}
    assert around == sorted(around)


def test_standard_neighborhoods():
    assert set(V4.offsets) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert len(V8) == 8 and all(max(map(abs, v)) == 1 for v in V8)
    v26 = standard_neighborhood(3, 26)
    assert len(v26) == 26 and all(max(map(abs, v)) == 1 for v in v26)
    assert len(standard_neighborhood(3, 6)) == 6


@pytest.mark.parametrize("dim,kind", [(2, 6), (3, 4), (2, 26), (3, 8), (1, 4)])
def test_standard_neighborhood_mismatch(dim, kind):
    with pytest.raises(ValueError):
        standard_neighborhood(dim, kind)


def test_neighborhood_rejects_zero_and_duplicates():
    with pytest.raises(ValueError):
        Neighborhood([(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        Neighborhood([(1, 0), (1, 0)])
    with pytest.raises(ValueError):
        Neighborhood([(1,), (1, 0)])


def test_dilate():
    assert dilate({(3,)}, LINE, GridDomain.full([7])) == {(2,), (3,), (4,)}
    assert dilate(set(), LINE, GridDomain.full([7])) == frozenset()
    # enumerated by hand: origin plus its two in-box 4-neighbors
    assert dilate({(0, 0)}, V4, GridDomain.full([3, 3])) == {(0, 0), (1, 0), (0, 1)}


def test_dilate_respects_mask():
    mask = np.ones(7, bool)
    mask[4] = False
    assert dilate({(3,)}, LINE, GridDomain(mask)) == {(2,), (3,)}


def test_erode():
    assert erode({(0,), (1,), (2,)}, LINE) == {(1,)}
    assert erode(set(), LINE) == frozenset()
    assert erode({(5, 5)}, V8) == frozenset()


def test_reachable():
    line = GridDomain.full([7])
    assert reachable(line, [(0,)], LINE) == {(k,) for k in range(7)}
    mask = np.ones(7, bool)
    mask[3] = False
    assert reachable(GridDomain(mask), [(0,)], LINE) == {(0,), (1,), (2,)}
    assert reachable(line, [], LINE) == frozenset()
    with pytest.raises(ValueError):
        reachable(GridDomain(mask), [(3,)], LINE)


def test_neighbor_table_matches_neighbors():
    rng = np.random.default_rng(5)
    dom = GridDomain(rng.random((5, 6)) < 0.6)
    table = dom.neighbor_table(V8)
    for idx in range(dom.size):
        x = dom.point(idx)
        if not dom.mask[x]:
            assert table[idx] == ()
            continue
        want = [y for y in neighbors(x, V8) if dom.in_box(y) and dom.mask[y]]
        assert [dom.point(j) for j in table[idx]] == want


def test_flat_index_roundtrip():
    dom = GridDomain.full((3, 4, 5))
    for idx in range(dom.size):
        assert dom.index(dom.point(idx)) == idx
    assert dom.point(0) == (0, 0, 0) and dom.point(1) == (0, 0, 1)


masks = st.integers(2, 7).flatmap(
    lambda h: st.integers(2, 7).flatmap(
        lambda w: st.lists(st.booleans(), min_size=h * w, max_size=h * w).map(lambda b: np.array(b).reshape(h, w))
    )
)


@settings(max_examples=60, deadline=None)
@given(masks, st.sampled_from([4, 8]), st.data())
def test_dilate_extensive_and_monotone(mask, kind, data):
    dom = GridDomain(mask)
    V = standard_neighborhood(2, kind)
    omega = sorted(dom.points())
    if not omega:
        return
    S = set(data.draw(st.lists(st.sampled_from(omega), max_size=6)))
    T = S | set(data.draw(st.lists(st.sampled_from(omega), max_size=6)))
    assert S <= dilate(S, V, dom)
    assert dilate(S, V, dom) <= dilate(T, V, dom)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.tuples(st.integers(3, 8), st.integers(3, 8)), max_size=10), st.sampled_from([4, 8]))
def test_erode_of_dilate_contains_set(S, kind):
    V = standard_neighborhood(2, kind)
    big = GridDomain.full((12, 12))
    assert S <= erode(dilate(S, V, big), V)


@settings(max_examples=60, deadline=None)
@given(masks, st.data())
def test_reachable_inside_omega_and_contains_seeds(mask, data):
    dom = GridDomain(mask)
    omega = sorted(dom.points())
    seeds = data.draw(st.lists(st.sampled_from(omega), max_size=3)) if omega else []
    R = reachable(dom, seeds, V4)
    assert R <= dom.points()
    assert set(seeds) <= R


def test_neighbors_order_is_stable():
    V = Neighborhood(list(itertools.permutations([1, 0, -1], 2)))
    assert [tuple(v) for v in V] == sorted(V.offsets)
    assert neighbors((0, 0), V) == neighbors((0, 0), Neighborhood(reversed(V.offsets)))
