import random
from fractions import Fraction as F

import pytest

from conftest import random_connected_graph
from ncgame import fixtures as fx
from ncgame.cycles import Cycle, biconnected_components
from ncgame.errors import PremiseFailureError
from ncgame.lemmas import (
    Verdict,
    check_ceiling_floor,
    check_chordless_and_opposite,
    check_girth_bound,
    check_min_cycle_lemma,
    check_removal_bound,
    check_satellite_disjoint,
    check_tree,
    girth_threshold,
    run_all,
    summarize,
    theorem_case_audit,
)


def test_girth_threshold_formula():
    assert girth_threshold(11, F(25)) == 7
    assert girth_threshold(5, F(6)) == F(5)


def test_girth_bound_vacuous_below_threshold():
    r = check_girth_bound(fx.cyc5(), F(2))
    assert r.verdict is Verdict.VACUOUS
    assert r.details["structural"] is True


def test_run_all_cyc5_equilibrium_no_fail():
    reports = run_all(fx.cyc5(), F(2))
    assert summarize(reports)["FAIL"] == 0


def test_run_all_star4_tree_mostly_vacuous():
    reports = run_all(fx.star4(), F(7))
    s = summarize(reports)
    assert s["FAIL"] == 0
    assert check_tree(fx.star4())


def test_ceiling_floor_cyc5():
    c = Cycle(vertices=(0, 1, 2, 3, 4))
    r = check_ceiling_floor(fx.cyc5(), c)
    assert r.verdict is Verdict.PASS
    assert r.details["roots"] == (2, 3)
    assert r.details["common"] == [0]


def test_ceiling_floor_cyc5_pendant_common_includes_satellite():
    c = Cycle(vertices=(0, 1, 2, 3, 4))
    r = check_ceiling_floor(fx.cyc5_pendant(), c)
    assert r.verdict is Verdict.PASS
    assert r.details["common"] == [0, 5]


def test_case_audit_cyc5_premise_failure():
    # no cycle vertex buys an edge outside the cycle
    with pytest.raises(PremiseFailureError):
        theorem_case_audit(fx.cyc5(), F(13))


def test_case_audit_tree_premise_failure():
    with pytest.raises(PremiseFailureError):
        theorem_case_audit(fx.star4(), F(13))


def test_case_audit_k4():
    audit = theorem_case_audit(fx.k4lex(), F(10))
    assert audit.k_max == 3 and audit.p1_len == 1
    held = [c for c in audit.per_case if c.premise_holds]
    assert held, "some case premise must fire"
    # not an equilibrium at alpha=10: some fired case reports a negative value
    assert any(c.value is not None and c.value <= 0 for c in held)
    case3 = audit.per_case[2]
    assert case3.premise_holds and case3.value == 3 - 10


@pytest.mark.parametrize("seed", range(30))
def test_structural_suite_random_graphs(seed):
    rng = random.Random(9000 + seed)
    g = random_connected_graph(rng, rng.randint(4, 9))
    for check in (check_min_cycle_lemma, check_chordless_and_opposite,
                  check_removal_bound, check_satellite_disjoint):
        assert check(g).verdict is not Verdict.FAIL, (check.__name__, g.edges)
    for comp in biconnected_components(g):
        if not comp.is_cyclic:
            continue
        for c in comp.min_cycles:
            for shift in range(len(c.vertices)):
                rotated = Cycle(
                    vertices=c.vertices[shift:] + c.vertices[:shift],
                    is_min=True, is_chordless=c.is_chordless,
                    is_directed=c.is_directed)
                r = check_ceiling_floor(g, rotated)
                assert r.verdict is Verdict.PASS, (g.edges, rotated.vertices)
