"""Strategy bound evaluators: fixture values and soundness sweeps."""

import random
from fractions import Fraction as F

import pytest

from conftest import random_connected_graph
from ncgame import fixtures as fx
from ncgame.errors import PreconditionFailedError
from ncgame.residuals import (
    strategy_residual_I,
    strategy_residual_II,
    strategy_residual_III,
)


def test_strategy_I_cyc5():
    r = strategy_residual_I(fx.cyc5(), 2, 0, 1)
    assert r.bound_value == 1 and r.exact_delta == 0
    assert r.preconditions_met
    assert r.exact_delta <= r.bound_value


def test_strategy_I_k4():
    # complete graph: u is already a neighbor, so the bound is reported
    # informationally but not certified sound
    r = strategy_residual_I(fx.k4lex(), 2, 0, 1)
    assert r.bound_value == 1 and r.exact_delta == 1
    assert not r.preconditions_met


def test_strategy_I_rejects_acyclic_pair():
    with pytest.raises(PreconditionFailedError):
        strategy_residual_I(fx.star4(), 2, 1, 0)


def test_strategy_I_rejects_forced_witness():
    # in C5 every SPT rooted at v1 keeps v0's other neighbor below it
    with pytest.raises(PreconditionFailedError):
        strategy_residual_I(fx.cyc5(), 1, 0, 4)


def test_strategy_II_k4():
    r = strategy_residual_II(fx.k4lex(), 2, 0, 1, (0, 3), F(1))
    assert r.bound_value == 0
    assert r.simplified_bound == 1
    assert r.exact_delta == 0
    assert r.simplified_bound >= r.bound_value

    r2 = strategy_residual_II(fx.k4lex(), 2, 0, 1, (0, 3), F(2))
    assert r2.bound_value == -1 and r2.exact_delta == -2


def test_strategy_III_k4():
    r = strategy_residual_III(fx.k4lex(), 2, 0, F(1))
    assert r.bound_value == 1 and r.exact_delta == 0
    assert r.details["ell"] == 3


def test_strategy_III_cyc5():
    r = strategy_residual_III(fx.cyc5(), 2, 0, F(3))
    assert r.bound_value == 4 and r.exact_delta == 0
    assert r.preconditions_met


def test_strategy_III_rejects_out_of_component_edges():
    with pytest.raises(PreconditionFailedError):
        strategy_residual_III(fx.cyc5_pendant(), 2, 5, F(2))


def _soundness_sweep(seed, n_lo=4, n_hi=7):
    rng = random.Random(seed)
    g = random_connected_graph(rng, rng.randint(n_lo, n_hi))
    alphas = [F(1, 2), F(2), F(11, 3)]
    checked = 0
    for v in range(g.n):
        owned = sorted(e.other(v) for e in g.edges if e.owner == v)
        for u in range(g.n):
            for w in owned:
                try:
                    r = strategy_residual_I(g, u, v, w)
                except PreconditionFailedError:
                    continue
                if r.preconditions_met:
                    assert r.exact_delta <= r.bound_value, (g.edges, u, v, w)
                    checked += 1
                for z in owned:
                    if z == w:
                        continue
                    for alpha in alphas:
                        try:
                            r2 = strategy_residual_II(
                                g, u, v, w, (min(v, z), max(v, z)), alpha)
                        except PreconditionFailedError:
                            continue
                        assert r2.simplified_bound >= r2.bound_value
                        if r2.preconditions_met:
                            assert r2.exact_delta <= r2.bound_value, (
                                g.edges, u, v, w, z, alpha)
                            checked += 1
            for alpha in alphas:
                try:
                    r3 = strategy_residual_III(g, u, v, alpha)
                except PreconditionFailedError:
                    continue
                if r3.preconditions_met:
                    assert r3.exact_delta <= r3.bound_value, (g.edges, u, v, alpha)
                    checked += 1
    return checked


@pytest.mark.parametrize("seed", range(25))
def test_soundness_random_graphs(seed):
    _soundness_sweep(8000 + seed)
