import pytest
from hypothesis import given, settings, strategies as st

from ktuple import (
    BudgetExceeded,
    Graph,
    OracleBudget,
    WebParams,
    ZeroOneMatrix,
    oracle_c1p,
    oracle_interval_mis,
    oracle_min_ktuple,
    verify_ktuple,
    web_graph,
)
from ktuple.recognition import is_consecutive_order

from conftest import GPRIME_ROWS, matrix_from_rows
from test_graph import graphs


def test_infeasible_web():
    assert oracle_min_ktuple(web_graph(WebParams(15, 4)), 10).value is None


def test_gprime(gprime):
    res = oracle_min_ktuple(gprime, 2)
    assert res.value == 3 and verify_ktuple(gprime, res.witness, 2)


def test_complete_web():
    assert oracle_min_ktuple(web_graph(WebParams(9, 4)), 4).value == 4


def test_budget_rejected_up_front():
    with pytest.raises(BudgetExceeded):
        oracle_min_ktuple(Graph.complete(15), 2)
    assert oracle_min_ktuple(Graph.complete(15), 2, OracleBudget(max_vertices=15)).value == 2
    with pytest.raises(BudgetExceeded):
        oracle_c1p(ZeroOneMatrix.from_rows([[1]] * 8))
    with pytest.raises(BudgetExceeded):
        oracle_interval_mis([(i, i, i) for i in range(21)])


def test_interval_mis_small():
    assert oracle_interval_mis([(1, 2, 5)]) == 1


def test_c1p_small():
    assert oracle_c1p(ZeroOneMatrix.from_rows([[0]]))[0]
    assert oracle_c1p(ZeroOneMatrix.from_rows([[1]]))[0]
    ok, perm = oracle_c1p(matrix_from_rows(GPRIME_ROWS).complement())
    assert ok and is_consecutive_order(matrix_from_rows(GPRIME_ROWS).complement(), perm)


def test_deterministic_witness():
    g = web_graph(WebParams(10, 2))
    assert oracle_min_ktuple(g, 2).witness == oracle_min_ktuple(g, 2).witness


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_zero_and_monotone(g):
    zero = oracle_min_ktuple(g, 0)
    assert zero.value == 0 and zero.witness == ()
    prev = 0
    for k in range(1, g.min_degree + 2):
        res = oracle_min_ktuple(g, k)
        assert res.value >= max(prev, k)
        assert verify_ktuple(g, res.witness, k)
        prev = res.value
    assert oracle_min_ktuple(g, g.min_degree + 2).value is None
