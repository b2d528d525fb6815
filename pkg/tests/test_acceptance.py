"""Acceptance gate: one test (and one printed PASS/FAIL line) per criterion.

All arithmetic is exact; every tolerance below is zero.
"""

import random
import sys
from fractions import Fraction as F

import pytest

from conftest import (
    all_spt_parent_maps,
    naive_interval,
    random_connected_graph,
    random_profile,
    spt_below_edge,
    spt_below_vertex,
)
from ncgame import fixtures as fx
from ncgame.census import census, decode_profile, interval_sample_points
from ncgame.engine import is_nash, nash_alpha_interval
from ncgame.errors import PreconditionFailedError
from ncgame.io import census_to_csv
from ncgame.lemmas import (
    Verdict,
    check_chordless_and_opposite,
    check_ceiling_floor,
    check_min_cycle_lemma,
    check_removal_bound,
    check_satellite_disjoint,
    girth_threshold,
    run_all,
    summarize,
)
from ncgame.residuals import (
    strategy_residual_I,
    strategy_residual_II,
    strategy_residual_III,
)
from ncgame.spt import Membership, spt_membership_edge, spt_membership_vertex


def _report(num: int, label: str, ok: bool) -> None:
    verdict = "PASS" if ok else "FAIL"
    print(f"[{verdict}] criterion {num}: {label}", file=sys.stderr)
    assert ok, f"criterion {num} failed: {label}"


@pytest.fixture(scope="module")
def census_by_n(census5):
    out = {n: census(n, with_lemmas=False) for n in (2, 3, 4)}
    out[5] = census5
    return out


def test_criterion_01_theorem_regression(census_by_n):
    bad = []
    for n, records in census_by_n.items():
        for r in records:
            if not r.is_tree and r.nash_interval.intersects(
                    F(3 * (n - 1)), None, lo_closed=False):
                bad.append(r.canonical_id)
    _report(1, "no non-tree equilibrium interval meets (3(n-1), inf), "
               "n=2..5 exhaustive", not bad)


def test_criterion_02_revised_conjecture(census_by_n):
    bad = []
    for n, records in census_by_n.items():
        for r in records:
            if not r.is_tree and r.nash_interval.intersects(
                    F(n), None, lo_closed=True):
                bad.append(r.canonical_id)
    _report(2, "no non-tree equilibrium interval meets [n, inf), "
               "n=2..5 exhaustive", not bad)


def test_criterion_03_fixture_intervals():
    expected = {
        "K4lex": (fx.k4lex(), (F(0), False, F(1), True)),
        "CYC5": (fx.cyc5(), (F(1), True, F(4), True)),
        "STAR4": (fx.star4(), (F(1), True, None, False)),
    }
    ok = True
    for g, want in expected.values():
        iv = nash_alpha_interval(g)
        got = (iv.lower, iv.lower_closed, iv.upper, iv.upper_closed)
        empty, lo, lo_c, hi, hi_c = naive_interval(g)
        ok &= not iv.empty and not empty
        ok &= got == want == (lo, lo_c, hi, hi_c)
    _report(3, "fixture intervals exact and equal to naive oracle", ok)


def test_criterion_04_girth_threshold():
    _report(4, "girth threshold (n=11, alpha=25) == 7 exactly",
            girth_threshold(11, F(25)) == F(7))


def test_criterion_05_bound_soundness():
    graphs = 0
    checked = 0
    violations = 0
    alphas = [F(1, 2), F(7, 3)]
    rng = random.Random(0x51)
    while graphs < 1000:
        g = random_connected_graph(rng, rng.randint(4, 9))
        graphs += 1
        for v in range(g.n):
            owned = sorted(e.other(v) for e in g.edges if e.owner == v)
            for u in range(g.n):
                for w in owned:
                    try:
                        r = strategy_residual_I(g, u, v, w)
                    except PreconditionFailedError:
                        continue
                    if r.preconditions_met:
                        checked += 1
                        violations += r.exact_delta > r.bound_value
                    for z in owned:
                        if z == w:
                            continue
                        for alpha in alphas:
                            try:
                                r2 = strategy_residual_II(
                                    g, u, v, w,
                                    (min(v, z), max(v, z)), alpha)
                            except PreconditionFailedError:
                                continue
                            violations += r2.simplified_bound < r2.bound_value
                            if r2.preconditions_met:
                                checked += 1
                                violations += r2.exact_delta > r2.bound_value
                for alpha in alphas:
                    try:
                        r3 = strategy_residual_III(g, u, v, alpha)
                    except PreconditionFailedError:
                        continue
                    if r3.preconditions_met:
                        checked += 1
                        violations += r3.exact_delta > r3.bound_value
    _report(5, f"bound soundness I/II/III on {graphs} graphs "
               f"({checked} configurations, {violations} violations); "
               "simplified >= full everywhere", violations == 0)


def test_criterion_06_verdict_interval_coherence():
    rng = random.Random(0x61)
    pairs = 0
    disagreements = 0
    while pairs < 10_000:
        g = random_profile(rng, rng.randint(2, 7))
        iv = nash_alpha_interval(g)
        for _ in range(5):
            alpha = F(rng.randint(1, 40), rng.randint(1, 6))
            pairs += 1
            if is_nash(g, alpha).is_equilibrium != iv.contains(alpha):
                disagreements += 1
    _report(6, f"is_nash <=> interval membership on {pairs} pairs "
               f"({disagreements} disagreements)", disagreements == 0)


def test_criterion_07_structural_lemma_suite():
    from ncgame.cycles import Cycle, biconnected_components

    rng = random.Random(0x71)
    fails = 0
    for _ in range(1000):
        g = random_connected_graph(rng, rng.randint(4, 9))
        for check in (check_min_cycle_lemma, check_chordless_and_opposite,
                      check_removal_bound, check_satellite_disjoint):
            fails += check(g).verdict is Verdict.FAIL
        for comp in biconnected_components(g):
            if not comp.is_cyclic:
                continue
            for c in comp.min_cycles:
                for shift in range(len(c.vertices)):
                    rotated = Cycle(
                        vertices=c.vertices[shift:] + c.vertices[:shift],
                        is_min=True, is_chordless=c.is_chordless,
                        is_directed=c.is_directed)
                    fails += check_ceiling_floor(g, rotated).verdict is Verdict.FAIL
    _report(7, "structural lemma suite on 1000 graphs, zero FAIL",
            fails == 0)


def test_criterion_08_spt_membership_oracle():
    rng = random.Random(0x81)
    mismatches = 0
    for _ in range(200):
        g = random_connected_graph(rng, rng.randint(3, 6))
        for root in range(g.n):
            trees = all_spt_parent_maps(g, root)
            for pivot in range(g.n):
                if pivot == root:
                    continue
                for target in range(g.n):
                    if target == root:
                        continue
                    hits = sum(1 for t in trees
                               if target in spt_below_vertex(t, pivot))
                    want = (Membership.FORCED if hits == len(trees)
                            else Membership.FORBIDDEN if hits == 0
                            else Membership.OPTIONAL)
                    got = spt_membership_vertex(g, root, pivot, target)
                    mismatches += got is not want
            for e in g.edges:
                for (a, b) in ((e.u, e.v), (e.v, e.u)):
                    if g.dist(root, a) + 1 != g.dist(root, b):
                        continue
                    for target in range(g.n):
                        if target == root:
                            continue
                        hits = 0
                        for t in trees:
                            below = spt_below_edge(t, a, b)
                            hits += below is not None and target in below
                        want = (Membership.FORCED if hits == len(trees)
                                else Membership.FORBIDDEN if hits == 0
                                else Membership.OPTIONAL)
                        got = spt_membership_edge(g, root, (a, b), target)
                        mismatches += got is not want
    _report(8, "SPT membership equals all-SPT brute force on 200 graphs",
            mismatches == 0)


def test_criterion_09_lemma_blanket_regression(census_by_n):
    fails = 0
    equilibria = 0
    for n, records in census_by_n.items():
        for r in records:
            g = decode_profile(n, r.canonical_id)
            equilibria += 1
            for alpha in interval_sample_points(r.nash_interval):
                fails += summarize(run_all(g, alpha))["FAIL"]
    _report(9, f"run_all zero FAIL at 3 interval points for all "
               f"{equilibria} census equilibria", fails == 0)


def test_criterion_10_census_determinism():
    outputs = {
        w: census_to_csv(census(4, workers=w, with_lemmas=False)).encode()
        for w in (1, 4, 8)
    }
    _report(10, "census byte-identical across 1/4/8 workers",
            outputs[1] == outputs[4] == outputs[8])
