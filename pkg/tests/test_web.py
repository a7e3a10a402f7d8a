from math import ceil, gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ktuple import (
    Derivation,
    Graph,
    InputError,
    WebParams,
    algorithm1,
    augmented_adjacency,
    class_partition_check,
    class_sequence,
    closed_neighborhood,
    dom,
    universal_vertices,
    verify_ktuple,
    web_graph,
)
from ktuple import web
from ktuple.web import coverage, dom_size, label_to_vertex, verify_web

W15 = WebParams(15, 4)


@st.composite
def web_params(draw, max_n=400):
    m = draw(st.integers(1, 20))
    n = draw(st.integers(2 * m + 1, max(2 * m + 1, max_n)))
    return WebParams(n, m)


def test_params_derived_values():
    assert (W15.c, W15.r, W15.mu, W15.l1, W15.l2) == (1, 6, 3, 2, 3)
    p = WebParams(18, 4)
    assert (p.r, p.mu, p.l1, p.l2, p.class_size) == (0, 9, 0, 1, 2)


def test_params_reject_small_n():
    with pytest.raises(InputError):
        WebParams(8, 4)
    with pytest.raises(InputError):
        WebParams(5, 0)


def test_web_graph_shape():
    g = web_graph(W15)
    assert g.n == 15 and all(g.degree(v) == 8 for v in g.vertices)
    assert web_graph(WebParams(9, 4)).edges() == Graph.complete(9).edges()
    m = augmented_adjacency(web_graph(WebParams(7, 2)))
    assert str(m).split()[0] == "1110011"


def test_arithmetic_neighborhood_matches_graph():
    g = web_graph(W15)
    for j in range(1, 16):
        assert set(web.closed_neighborhood(W15, j)) == closed_neighborhood(g, j)
    assert web.closed_neighborhood(W15, 5) == list(range(1, 10))


def test_class_sequences_golden():
    assert class_sequence(W15, 1).tolist() == [1, 10, 4, 13, 7]
    assert class_sequence(W15, 2).tolist() == [2, 11, 5, 14, 8]
    assert class_sequence(W15, 3).tolist() == [3, 12, 6, 15, 9]
    assert class_sequence(WebParams(18, 4), 5).tolist() == [5, 14]
    with pytest.raises(InputError):
        class_sequence(W15, 4)


def test_dom_worked_run():
    s1 = class_sequence(W15, 1)
    assert dom(W15, s1, 1).tolist() == [1, 10]
    assert dom(W15, s1, 2).tolist() == [1, 10, 4, 13]
    assert dom(W15, s1, 3).tolist() == [1, 10, 4, 13, 7]
    assert dom(W15, s1, 0).tolist() == []
    with pytest.raises(InputError):
        dom(W15, s1, 4)


# k -> (value, shifted-label set when the construction is forced)
GOLDEN = {
    1: (2, {1, 10}),
    2: (4, {1, 10, 4, 13}),
    3: (5, {1, 10, 4, 13, 7}),
    4: (7, None),
    5: (9, None),
    6: (10, None),
    7: (12, None),
    8: (14, None),
    9: (15, set(range(1, 16))),
}


@pytest.mark.parametrize("k", range(1, 10))
def test_w15_golden(k):
    value, labels = GOLDEN[k]
    res = algorithm1(W15, k)
    assert res.value == value == len(res.witness)
    assert verify_ktuple(web_graph(W15), res.witness, k)
    if labels is not None:
        assert set(res.witness) == labels


def test_w15_vertex_labels():
    res = algorithm1(W15, 3)
    vertices = label_to_vertex(W15, np.array(res.witness)).tolist()
    assert vertices == [5, 14, 8, 2, 11]


def test_w15_table_row_eight_verifies():
    row = {1, 10, 4, 13, 7, 2, 11, 5, 14, 8, 3, 12, 6, 15}
    assert verify_web(W15, sorted(row), 8)
    assert verify_ktuple(web_graph(W15), row, 8)


def test_algorithm1_r_zero_family():
    p = WebParams(18, 4)
    res = algorithm1(p, 3)
    assert res.value == 6 == 3 * p.c
    assert verify_web(p, res.witness, 3)


def test_algorithm1_edges():
    assert algorithm1(W15, 10).value is None
    assert algorithm1(W15, 0).value == 0
    with pytest.raises(InputError):
        algorithm1(W15, -1)
    assert algorithm1(W15, 7).derivation == (Derivation.WEB_CLASSES,)


def test_complete_web():
    p = WebParams(9, 4)
    assert universal_vertices(web_graph(p)) == set(range(1, 10))
    assert algorithm1(p, 4).value == 4
    assert class_partition_check(p)


def test_small_exhaustive_sweep():
    for n in range(3, 15):
        for m in range(1, (n - 1) // 2 + 1):
            p = WebParams(n, m)
            g = web_graph(p)
            assert class_partition_check(p)
            for i in range(1, p.mu + 1):
                seq = class_sequence(p, i)
                for alpha in range(p.l2 + 1):
                    assert verify_ktuple(g, dom(p, seq, alpha).tolist(), alpha)
            for k in range(1, p.width + 1):
                res = algorithm1(p, k)
                assert res.value == ceil(k * n / p.width)
                assert verify_ktuple(g, res.witness, k)


@settings(max_examples=150, deadline=None)
@given(web_params(), st.data())
def test_value_and_bounds(p, data):
    k = data.draw(st.integers(1, p.width))
    res = algorithm1(p, k)
    assert res.value == -(-k * p.n // p.width)
    assert k * (p.n // p.width) <= res.value <= k * -(-p.n // p.width)
    assert len(set(res.witness)) == res.value
    assert verify_web(p, res.witness, k)
    # every vertex is counted at least k times
    assert p.width * res.value >= k * p.n


@settings(max_examples=100, deadline=None)
@given(web_params())
def test_l2_tuple_value(p):
    assert algorithm1(p, p.l2).value == p.n // p.mu


@settings(max_examples=100, deadline=None)
@given(web_params())
def test_class_structure(p):
    assert class_partition_check(p)
    assert p.n == (p.c * p.l2 + p.l1) * p.mu
    assert gcd(p.l2, p.c * p.l2 + p.l1) == 1
    seq = class_sequence(p, 1).labels
    assert np.all((seq[1:] - seq[:-1]) % p.n == p.width % p.n)


@settings(max_examples=100, deadline=None)
@given(web_params(max_n=200), st.data())
def test_contiguous_window_dominates(p, data):
    i = data.draw(st.integers(1, p.mu))
    seq = class_sequence(p, i).labels
    if len(seq) < p.c + 1:
        return
    start = data.draw(st.integers(0, len(seq) - 1))
    window = np.roll(seq, -start)[: p.c + 1]
    assert verify_web(p, window, 1)


@settings(max_examples=100, deadline=None)
@given(web_params(max_n=200))
def test_neighbourhood_union_of_successors(p):
    seq = class_sequence(p, 1).tolist()
    if len(seq) < 2:
        return
    j, q = seq[0], seq[1]
    union = set(web.closed_neighborhood(p, j)) | set(web.closed_neighborhood(p, q))
    expected = p.n if p.c == 1 else 2 * p.width
    assert len(union) == expected


@settings(max_examples=60, deadline=None)
@given(web_params(max_n=60), st.data())
def test_coverage_matches_graph(p, data):
    labels = data.draw(st.sets(st.integers(1, p.n)))
    g = web_graph(p)
    cov = coverage(p, sorted(labels))
    for v in g.vertices:
        assert cov[v - 1] == len(closed_neighborhood(g, v) & labels)


def test_verify_web_input_checks():
    with pytest.raises(InputError):
        verify_web(W15, [0, 3], 1)
    with pytest.raises(InputError):
        verify_web(W15, [3, 3], 1)
    assert verify_web(W15, [], 0)


def test_dom_size_formula():
    assert [dom_size(W15, a) for a in range(4)] == [0, 2, 4, 5]
