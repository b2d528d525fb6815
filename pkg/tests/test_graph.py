import pytest

from ncgame import fixtures as fx
from ncgame.errors import (
    DuplicatePairError,
    IndexOutOfRangeError,
    OwnerNotEndpointError,
    SelfLoopError,
)
from ncgame.graph import INF, build_graph, connection_cost, girth


def test_build_graph_normalizes_and_sorts():
    g = build_graph(3, [(1, 0, 1), (2, 1, 2)])
    assert [(e.u, e.v, e.owner) for e in g.edges] == [(0, 1, 1), (1, 2, 2)]


def test_build_graph_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_graph(2, [(0, 0, 0)])


def test_build_graph_rejects_duplicate_pair():
    with pytest.raises(DuplicatePairError):
        build_graph(3, [(0, 1, 0), (1, 0, 1)])


def test_build_graph_rejects_foreign_owner():
    with pytest.raises(OwnerNotEndpointError):
        build_graph(3, [(0, 1, 2)])


def test_build_graph_rejects_out_of_range():
    with pytest.raises(IndexOutOfRangeError):
        build_graph(2, [(0, 5, 0)])


def test_distances_cyc5():
    g = fx.cyc5()
    assert g.dist(0, 2) == 2
    assert g.dist(0, 3) == 2
    assert connection_cost(g, 0) == 6


def test_disconnected_distance_is_inf():
    g = build_graph(3, [(0, 1, 0)])
    assert g.dist(0, 2) == INF
    assert connection_cost(g, 0) == INF
    assert not g.is_connected()


def test_girth():
    assert girth(fx.cyc5()) == 5
    assert girth(fx.k4lex()) == 3
    assert girth(fx.star4()) == INF
    assert girth(fx.theta()) == 4


def test_ownership_lookup():
    g = fx.cyc5()
    assert g.owner_of(0, 1) == 0
    assert g.owner_of(4, 0) == 4
    assert g.owned_targets(0) == frozenset({1})
