import pytest
from hypothesis import given, settings, strategies as st

from ktuple import (
    Graph,
    InputError,
    augmented_adjacency,
    closed_neighborhood,
    connected_components,
    induced_subgraph,
    universal_vertices,
    verify_ktuple,
)
from ktuple.graph import deficiencies

from conftest import GPRIME_ROWS


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


def test_graph_rejects_self_loop_and_range():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(3, [(1, 4)])
    with pytest.raises(InputError):
        Graph(0, [])


def test_closed_neighborhood_web_window(w15):
    # vertex 5 sees the nine consecutive vertices 1..9
    assert closed_neighborhood(w15, 5) == set(range(1, 10))


def test_closed_neighborhood_small_cases():
    assert closed_neighborhood(Graph.complete(3), 1) == {1, 2, 3}
    assert closed_neighborhood(Graph(3, [(1, 2), (2, 3)]), 2) == {1, 2, 3}
    with pytest.raises(InputError):
        closed_neighborhood(Graph.complete(3), 4)


def test_augmented_adjacency_gprime(gprime):
    assert str(augmented_adjacency(gprime)).split() == GPRIME_ROWS


def test_augmented_adjacency_trivial():
    assert augmented_adjacency(Graph(3, [])).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert augmented_adjacency(Graph.complete(4)).tolist() == [[1] * 4] * 4


def test_universal_vertices(gprime, w15):
    assert universal_vertices(gprime) == {7}
    assert universal_vertices(Graph.complete(5)) == {1, 2, 3, 4, 5}
    assert universal_vertices(w15) == set()


def test_verify_ktuple_examples(w15, gprime):
    assert verify_ktuple(w15, {1, 10}, 1)
    assert not verify_ktuple(w15, {1, 10}, 2)
    assert verify_ktuple(gprime, set(), 0)
    assert deficiencies(w15, {1, 10}, 2)[5] == 1


def test_induced_subgraph(gprime):
    sub, mapping = induced_subgraph(gprime, range(1, 7))
    assert sub.n == 6 and mapping == (1, 2, 3, 4, 5, 6)
    assert universal_vertices(sub) == set()
    k3, _ = induced_subgraph(Graph.complete(4), [1, 2, 4])
    assert k3.edges() == Graph.complete(3).edges()
    with pytest.raises(InputError):
        induced_subgraph(gprime, [])


def test_connected_components(w15):
    assert connected_components(w15) == [list(range(1, 16))]
    assert connected_components(Graph(3, [])) == [[1], [2], [3]]
    assert connected_components(Graph(4, [(1, 2), (3, 4)])) == [[1, 2], [3, 4]]


@given(graphs())
def test_closed_neighborhood_contains_self(g):
    assert all(v in closed_neighborhood(g, v) for v in g.vertices)


@given(graphs(), st.integers(0, 9))
def test_whole_vertex_set_feasibility(g, k):
    assert verify_ktuple(g, g.vertices, k) == (k <= g.min_degree + 1)


@given(graphs(), st.data())
def test_verify_monotone_in_set_antitone_in_k(g, data):
    d = data.draw(st.sets(st.sampled_from(list(g.vertices))))
    extra = data.draw(st.sets(st.sampled_from(list(g.vertices))))
    k = data.draw(st.integers(0, g.n + 1))
    if verify_ktuple(g, d, k):
        assert verify_ktuple(g, d | extra, k)
        assert verify_ktuple(g, d, max(k - 1, 0))


@given(graphs())
def test_augmented_matrix_shape(g):
    m = augmented_adjacency(g)
    arr = m.entries
    assert (arr == arr.T).all() and (arr.diagonal() == 1).all()
    for v in g.vertices:
        assert arr[v - 1].sum() == len(closed_neighborhood(g, v))


@settings(max_examples=60)
@given(graphs(max_n=6), st.data())
def test_self_size_domination_means_universal(g, data):
    d = data.draw(st.sets(st.sampled_from(list(g.vertices)), min_size=1))
    if verify_ktuple(g, d, len(d)):
        assert d <= universal_vertices(g)


@given(graphs())
def test_components_partition(g):
    comps = connected_components(g)
    flat = sorted(v for c in comps for v in c)
    assert flat == list(g.vertices)
    for c in comps:
        s = set(c)
        for v in c:
            assert set(g.neighbors(v)) <= s
