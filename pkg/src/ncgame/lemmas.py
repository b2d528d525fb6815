"""One checker per structural lemma of the equilibrium analysis.

Each checker reports applicability (were the lemma's preconditions met?),
a PASS/FAIL/VACUOUS verdict, and a witness for failures.  Checkers whose
lemma only holds at a Nash equilibrium also evaluate their conclusion
structurally (ignoring the equilibrium precondition) and stash that result in
details["structural"], so non-equilibrium fixtures can still be probed
without conflating vacuity and failure.

All threshold comparisons are exact: k_max/3 tests are done as 3*d >= k_max
and the girth threshold 2*alpha/(n-1) + 2 is a Fraction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .cycles import (
    BiconnectedComponent,
    Cycle,
    biconnected_components,
    opposite_edges,
    smallest_cycle_through,
)
from .engine import is_nash
from .errors import DisconnectedError, NotMinCycleError, PremiseFailureError
from .game import OwnedGraph
from .graph import INF, bfs_distances, connection_cost, girth
from .spt import forced_under_vertex, possible_under_vertex


class Verdict(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    VACUOUS = "VACUOUS"


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    applicable: bool
    verdict: Verdict
    reasons: tuple[str, ...] = ()
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "lemmaId": self.lemma_id,
            "applicable": self.applicable,
            "verdict": self.verdict.value,
            "reasons": list(self.reasons),
            "witness": self.witness,
            "details": {k: str(v) for k, v in self.details.items()},
        }


def _vacuous(lemma_id: str, *reasons: str, details: dict | None = None) -> LemmaReport:
    return LemmaReport(
        lemma_id=lemma_id,
        applicable=False,
        verdict=Verdict.VACUOUS,
        reasons=tuple(reasons),
        details=details or {},
    )


def _verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


def _cyclic_components(g: OwnedGraph) -> list[BiconnectedComponent]:
    return [c for c in biconnected_components(g) if c.is_cyclic]


def check_min_cycle_lemma(g: OwnedGraph) -> LemmaReport:
    """Smallest cycle through any non-cut edge is isometric (any graph)."""
    lemma_id = "min-cycle"
    saw_cycle = False
    for e in g.edges:
        c = smallest_cycle_through(g, (e.u, e.v))  # asserts isometric itself
        if c is not None:
            saw_cycle = True
    if not saw_cycle:
        return _vacuous(lemma_id, "graph is a forest")
    return LemmaReport(lemma_id=lemma_id, applicable=True, verdict=Verdict.PASS)


def _opposite_edge_realizable(g: OwnedGraph, c: Cycle, v: int) -> bool:
    """Some SPT rooted at v contains all cycle edges except one opposite one:
    dropping that edge must leave cycle-path distances from v graph-exact."""
    vs = c.vertices
    k = len(vs)
    i0 = vs.index(v)
    for opp in opposite_edges(c, v):
        # indices of the opposite edge along the cycle
        gap = None
        for i in range(k):
            a, b = vs[i], vs[(i + 1) % k]
            if (min(a, b), max(a, b)) == opp:
                gap = i
                break
        assert gap is not None
        ok = True
        for j in range(k):
            x = vs[j]
            # distance from v to x along the cycle avoiding the gap edge
            fwd = (j - i0) % k
            bwd = (i0 - j) % k
            # walking forward crosses edge indices i0..j-1; backward j..i0-1
            crosses_fwd = (gap - i0) % k < fwd
            crosses_bwd = (gap - j) % k < bwd
            options = []
            if not crosses_fwd:
                options.append(fwd)
            if not crosses_bwd:
                options.append(bwd)
            if not options or min(options) != g.dist(v, x):
                ok = False
                break
        if ok:
            return True
    return False


def check_chordless_and_opposite(g: OwnedGraph) -> LemmaReport:
    """Every min-cycle is chordless and, per vertex, some SPT keeps the whole
    cycle except one opposite edge."""
    lemma_id = "chordless-opposite"
    comps = _cyclic_components(g)
    if not comps:
        return _vacuous(lemma_id, "no cyclic biconnected component")
    for comp in comps:
        for c in comp.min_cycles:
            if not c.is_chordless:
                return LemmaReport(
                    lemma_id, True, Verdict.FAIL,
                    witness={"cycle": list(c.vertices), "why": "chord"},
                )
            for v in c.vertices:
                if not _opposite_edge_realizable(g, c, v):
                    return LemmaReport(
                        lemma_id, True, Verdict.FAIL,
                        witness={"cycle": list(c.vertices), "vertex": v},
                    )
    return LemmaReport(lemma_id=lemma_id, applicable=True, verdict=Verdict.PASS)


def check_removal_bound(g: OwnedGraph) -> LemmaReport:
    """d_{G-e}(u,v) <= d_G(u,v) + k_max - 2 for edges of cyclic components."""
    lemma_id = "removal-bound"
    comps = _cyclic_components(g)
    if not comps:
        return _vacuous(lemma_id, "no cyclic biconnected component")
    tight = None
    for comp in comps:
        assert comp.k_max is not None
        for (a, b) in sorted(comp.edges):
            detour = bfs_distances(g.adjacency, a, blocked_edge=(a, b))[b]
            if detour > g.dist(a, b) + comp.k_max - 2:
                return LemmaReport(
                    lemma_id, True, Verdict.FAIL,
                    witness={"edge": [a, b], "detour": detour, "kMax": comp.k_max},
                )
            if detour == g.dist(a, b) + comp.k_max - 2:
                tight = (a, b)
    return LemmaReport(
        lemma_id=lemma_id, applicable=True, verdict=Verdict.PASS,
        details={"tight_edge": tight},
    )


def check_directed_min_cycles(
    g: OwnedGraph, alpha: Fraction, nash: bool | None = None
) -> LemmaReport:
    """Every min-cycle of a Nash equilibrium with alpha > 2(n-1) is directed."""
    lemma_id = "directed-min-cycles"
    comps = _cyclic_components(g)
    all_directed = True
    witness = None
    for comp in comps:
        for c in comp.min_cycles:
            if not c.is_directed:
                all_directed = False
                witness = {"cycle": list(c.vertices)}
                break
    reasons = []
    if nash is None:
        nash = is_nash(g, alpha).is_equilibrium
    if not nash:
        reasons.append("profile is not an equilibrium at this alpha")
    if not alpha > 2 * (g.n - 1):
        reasons.append("alpha <= 2(n-1)")
    if not comps:
        reasons.append("no cyclic biconnected component")
    if reasons:
        return _vacuous(lemma_id, *reasons, details={"structural": all_directed})
    return LemmaReport(
        lemma_id=lemma_id, applicable=True, verdict=_verdict(all_directed),
        witness=witness, details={"structural": all_directed},
    )


def girth_threshold(n: int, alpha: Fraction) -> Fraction:
    return Fraction(2) * alpha / (n - 1) + 2


def check_girth_bound(
    g: OwnedGraph, alpha: Fraction, nash: bool | None = None
) -> LemmaReport:
    """Equilibrium girth is at least 2*alpha/(n-1) + 2 when alpha > 2(n-1)."""
    lemma_id = "girth-bound"
    threshold = girth_threshold(g.n, alpha) if g.n > 1 else Fraction(2)
    gg = girth(g)
    holds = gg == INF or Fraction(int(gg)) >= threshold
    details = {"threshold": threshold, "girth": gg, "structural": holds}
    if nash is None:
        nash = is_nash(g, alpha).is_equilibrium
    reasons = []
    if not nash:
        reasons.append("profile is not an equilibrium at this alpha")
    if not alpha > 2 * (g.n - 1):
        reasons.append("alpha <= 2(n-1)")
    if reasons:
        return _vacuous(lemma_id, *reasons, details=details)
    return LemmaReport(
        lemma_id=lemma_id, applicable=True, verdict=_verdict(holds), details=details,
    )


def check_ceiling_floor(g: OwnedGraph, c: Cycle) -> LemmaReport:
    """The two antipodal roots of a min-cycle admit a common subtree below
    the cycle's start vertex: each root's forced set must be possible for the
    other root."""
    lemma_id = "ceiling-floor"
    if c.is_min is None:
        from .cycles import classify_cycle

        classify_cycle(g, c)
    if not c.is_min:
        raise NotMinCycleError(f"cycle {c.vertices} is not a min-cycle")
    vs = c.vertices
    k = len(vs)
    pivot = vs[0]
    a, b = vs[k // 2], vs[(k + 1) // 2]
    if a == b:
        return LemmaReport(
            lemma_id, True, Verdict.PASS,
            details={"pivot": pivot, "roots": (a, b), "common": None,
                     "trivial": True},
        )
    fa = forced_under_vertex(g, a, pivot)
    fb = forced_under_vertex(g, b, pivot)
    pa = possible_under_vertex(g, a, pivot) | fa
    pb = possible_under_vertex(g, b, pivot) | fb
    ok = fa <= pb and fb <= pa
    return LemmaReport(
        lemma_id, True, _verdict(ok),
        witness=None if ok else {"cycle": list(vs),
                                 "onlyFloor": sorted(fa - pb),
                                 "onlyCeil": sorted(fb - pa)},
        details={"pivot": pivot, "roots": (a, b), "common": sorted(fa | fb)},
    )


def _weak_satellites(g: OwnedGraph, comp: BiconnectedComponent) -> dict[int, set[int]]:
    hs = sorted(comp.vertices)
    sets: dict[int, set[int]] = {v: set() for v in hs}
    for x in range(g.n):
        best = min(g.dist(x, v) for v in hs)
        for v in hs:
            if g.dist(x, v) == best:
                sets[v].add(x)
    return sets


def check_satellite_disjoint(g: OwnedGraph) -> LemmaReport:
    """Closest-vertex satellite sets of a component never overlap."""
    lemma_id = "satellite-disjoint"
    if not g.is_connected():
        raise DisconnectedError("satellite sets need a connected graph")
    comps = _cyclic_components(g)
    if not comps:
        return _vacuous(lemma_id, "no cyclic biconnected component")
    for comp in comps:
        sets = _weak_satellites(g, comp)
        hs = sorted(sets)
        for i, u in enumerate(hs):
            for v in hs[i + 1:]:
                overlap = sets[u] & sets[v]
                if overlap:
                    return LemmaReport(
                        lemma_id, True, Verdict.FAIL,
                        witness={"component": sorted(comp.vertices),
                                 "u": u, "v": v, "overlap": sorted(overlap)},
                    )
    return LemmaReport(lemma_id=lemma_id, applicable=True, verdict=Verdict.PASS)


def _cycle_out_buyer(
    g: OwnedGraph, comp: BiconnectedComponent, c: Cycle
) -> tuple[int, tuple[int, int]] | None:
    cycle_edges = c.edge_keys()
    for v in c.vertices:
        for e in g.owned_by(v):
            if e.key() in comp.edges and e.key() not in cycle_edges:
                return v, e.key()
    return None


def check_outedge(
    g: OwnedGraph, alpha: Fraction, nash: bool | None = None
) -> LemmaReport:
    """Every min-cycle of a cyclic component has a vertex buying a component
    edge outside the cycle (equilibrium, alpha > 2(n-1))."""
    lemma_id = "out-edge"
    comps = _cyclic_components(g)
    structural_ok = True
    witness = None
    h_equals_c = False
    for comp in comps:
        for c in comp.min_cycles:
            if comp.edges == c.edge_keys():
                h_equals_c = True
            if _cycle_out_buyer(g, comp, c) is None:
                structural_ok = False
                if witness is None:
                    witness = {"cycle": list(c.vertices),
                               "component": sorted(comp.vertices)}
    details = {"structural": structural_ok, "componentEqualsCycle": h_equals_c}
    if nash is None:
        nash = is_nash(g, alpha).is_equilibrium
    reasons = []
    if not nash:
        reasons.append("profile is not an equilibrium at this alpha")
    if not alpha > 2 * (g.n - 1):
        reasons.append("alpha <= 2(n-1)")
    if not comps:
        reasons.append("no cyclic biconnected component")
    if reasons:
        return _vacuous(lemma_id, *reasons, details=details)
    return LemmaReport(
        lemma_id=lemma_id, applicable=True, verdict=_verdict(structural_ok),
        witness=witness, details=details,
    )


def _key_lemma_witnesses(
    g: OwnedGraph, comp: BiconnectedComponent, c: Cycle
) -> tuple[int, int, tuple[int, int], tuple[int, int]] | None:
    """Two cycle vertices at distance >= k_max/3 both buying edges off C."""
    cycle_edges = c.edge_keys()
    buyers: list[tuple[int, tuple[int, int]]] = []
    for v in sorted(c.vertices):
        for e in g.owned_by(v):
            if e.key() not in cycle_edges:
                buyers.append((v, e.key()))
                break
    assert comp.k_max is not None
    for i, (u, f) in enumerate(buyers):
        for v, h in buyers[i + 1:]:
            if 3 * g.dist(u, v) >= comp.k_max:
                return u, v, f, h
    return None


def check_key_lemma(
    g: OwnedGraph, alpha: Fraction, nash: bool | None = None
) -> LemmaReport:
    """A maximum-length min-cycle carries two off-cycle buyers at mutual
    distance >= k_max/3 (equilibrium, alpha > 2(n-1))."""
    lemma_id = "key-lemma"
    comps = _cyclic_components(g)
    structural_ok = True
    witness = None
    first_witness = None
    for comp in comps:
        for c in comp.min_cycles:
            if len(c) != comp.k_max:
                continue
            found = _key_lemma_witnesses(g, comp, c)
            if found is None:
                structural_ok = False
                if witness is None:
                    witness = {"cycle": list(c.vertices)}
            elif first_witness is None:
                u, v, f, h = found
                first_witness = {"u": u, "v": v, "f": list(f), "g": list(h)}
    details = {"structural": structural_ok, "witness": first_witness}
    if nash is None:
        nash = is_nash(g, alpha).is_equilibrium
    reasons = []
    if not nash:
        reasons.append("profile is not an equilibrium at this alpha")
    if not alpha > 2 * (g.n - 1):
        reasons.append("alpha <= 2(n-1)")
    if not comps:
        reasons.append("no cyclic biconnected component")
    if reasons:
        return _vacuous(lemma_id, *reasons, details=details)
    return LemmaReport(
        lemma_id=lemma_id, applicable=True, verdict=_verdict(structural_ok),
        witness=witness, details=details,
    )


def check_tree(g: OwnedGraph) -> bool:
    return g.is_connected() and len(g.edges) == g.n - 1


ALL_STRUCTURAL = ("min-cycle", "chordless-opposite", "removal-bound",
                  "ceiling-floor", "satellite-disjoint")


def run_all(g: OwnedGraph, alpha: Fraction) -> list[LemmaReport]:
    """Run every checker; ceiling/floor is aggregated over all min-cycles."""
    nash = is_nash(g, alpha).is_equilibrium if g.is_connected() else False
    reports = [
        check_min_cycle_lemma(g),
        check_chordless_and_opposite(g),
        check_removal_bound(g),
        check_directed_min_cycles(g, alpha, nash=nash),
        check_girth_bound(g, alpha, nash=nash),
    ]
    # ceiling/floor over every rotation of every min-cycle
    cf_reports = []
    for comp in _cyclic_components(g):
        for c in comp.min_cycles:
            vs = c.vertices
            for shift in range(len(vs)):
                rotated = Cycle(vertices=vs[shift:] + vs[:shift],
                                is_min=c.is_min, is_chordless=c.is_chordless,
                                is_directed=c.is_directed)
                cf_reports.append(check_ceiling_floor(g, rotated))
    if not cf_reports:
        reports.append(_vacuous("ceiling-floor", "no min-cycles"))
    else:
        bad = [r for r in cf_reports if r.verdict == Verdict.FAIL]
        reports.append(bad[0] if bad else LemmaReport(
            "ceiling-floor", True, Verdict.PASS,
            details={"cycles_checked": len(cf_reports)},
        ))
    if g.is_connected():
        reports.append(check_satellite_disjoint(g))
    else:
        reports.append(_vacuous("satellite-disjoint", "graph disconnected"))
    reports.append(check_outedge(g, alpha, nash=nash))
    reports.append(check_key_lemma(g, alpha, nash=nash))
    return reports


def summarize(reports: list[LemmaReport]) -> dict[str, int]:
    out = {"PASS": 0, "FAIL": 0, "VACUOUS": 0}
    for r in reports:
        out[r.verdict.value] += 1
    return out


# ---------------------------------------------------------------------------
# Case audit for the tree theorem's proof skeleton


@dataclass(frozen=True)
class CaseRecord:
    case_id: int
    premise_holds: bool
    value: Fraction | None
    note: str = ""


@dataclass(frozen=True)
class CaseAudit:
    r1: int
    r2: int
    r3: int
    p1_len: int
    k_max: int
    per_case: tuple[CaseRecord, ...]
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "r1": self.r1, "r2": self.r2, "r3": self.r3,
            "p1Len": self.p1_len, "kMax": self.k_max,
            "cases": [
                {"case": c.case_id, "premiseHolds": c.premise_holds,
                 "value": None if c.value is None else str(c.value),
                 "note": c.note}
                for c in self.per_case
            ],
            "notes": list(self.notes),
        }


def theorem_case_audit(g: OwnedGraph, alpha: Fraction) -> CaseAudit:
    """Numeric walk through the six proof cases on identified anchor vertices.

    Diagnostic only: evaluates each case's premise and concluding inequality
    value on this instance.  At a genuine equilibrium with alpha > 3(n-1) no
    case could report a non-negative value, which is the contradiction the
    proof exploits.
    """
    if not g.is_connected():
        raise PremiseFailureError("graph disconnected")
    comps = _cyclic_components(g)
    if not comps:
        raise PremiseFailureError("no cyclic biconnected component")
    chosen = None
    for comp in comps:
        for c in comp.min_cycles:
            if len(c) != comp.k_max:
                continue
            found = _key_lemma_witnesses(g, comp, c)
            if found is not None:
                chosen = (comp, c, found)
                break
        if chosen:
            break
    if chosen is None:
        raise PremiseFailureError(
            "no maximum min-cycle carries two off-cycle buyers at distance"
            " >= k_max/3 (itself evidence per the supporting lemmas)"
        )
    comp, c, (r1, r2, _f1, _f2) = chosen
    assert comp.k_max is not None
    k_max = comp.k_max
    n = g.n
    d12 = int(g.dist(r1, r2))
    p1_len = d12  # min-cycle: the shorter cycle path realizes the distance
    members_r2 = sorted(
        x for x in (possible_under_vertex(g, r1, r2)
                    | forced_under_vertex(g, r1, r2))
    )
    in_h = [x for x in members_r2 if x in comp.vertices]
    r3 = max(in_h, key=lambda x: (g.dist(r1, x), x))
    d32 = int(g.dist(r3, r2))

    def D(x: int) -> int:
        return int(connection_cost(g, x))

    def forced_size(root: int, pivot: int) -> int:
        return len(forced_under_vertex(g, root, pivot))

    cases: list[CaseRecord] = []
    # Case 1: some x below r2 (seen from r1) with D(r1) >= D(x)
    xs = [x for x in members_r2 if D(r1) >= D(x)]
    if xs:
        x = min(xs, key=lambda t: (D(t), t))
        t_x = forced_size(x, r1)
        dx = int(g.dist(r2, x))
        eq1 = Fraction(D(x) - D(r1) + n - 1 - (p1_len + dx + 1) * t_x)
        eq2 = (Fraction(D(x) - D(r1) + n - 1 + (k_max - p1_len - dx - 3) * t_x)
               - alpha)
        cases.append(CaseRecord(1, True, 2 * eq1 + eq2, note=f"x={x}"))
    else:
        cases.append(CaseRecord(1, False, None))
    # Case 2: d(r2,r3) >= k_max/3
    t_31 = forced_size(r3, r1) if r3 != r1 else 0
    if 3 * d32 >= k_max:
        eq3 = Fraction(D(r3) - D(r1) + n - 1 - (p1_len + d32 + 1) * t_31)
        eq4 = (Fraction(D(r3) - D(r1) + n - 1
                        + (k_max - p1_len - d32 - 3) * t_31) - alpha)
        eq5 = Fraction(D(r1) - D(r3) + n - 1)
        cases.append(CaseRecord(
            2, True, Fraction(1, 2) * eq3 + eq4 + Fraction(3, 2) * eq5))
    else:
        cases.append(CaseRecord(2, False, None))
    # Case 3: |T_{r1}(r2)| <= (n-1)/d(r3,r2)
    t_12 = forced_size(r1, r2)
    if d32 == 0 or t_12 * d32 <= n - 1:
        val = Fraction(D(r1) - D(r2) + n - 1 + 2 * d32 * t_12) - alpha
        cases.append(CaseRecord(3, True, val))
    else:
        cases.append(CaseRecord(3, False, None))
    # Case 4: D(r1) - D(r3) <= -(2 - |P1|/d(r3,r2)) (n-1)
    if d32 > 0 and (Fraction(D(r1) - D(r3))
                    <= -(2 - Fraction(p1_len, d32)) * (n - 1)):
        val = Fraction(D(r1) - D(r3) + n - 1 - (p1_len - d32) * t_12)
        cases.append(CaseRecord(
            4, True, val, note="unbound proof symbol u read as r3"))
    else:
        cases.append(CaseRecord(4, False, None,
                                note="unbound proof symbol u read as r3"))
    # Case 5: |T_{r3}(r1)| >= (3 - |P1|/d) (n-1) / (|P1| + d)
    if d32 > 0 and (Fraction(t_31)
                    >= (3 - Fraction(p1_len, d32))
                    * Fraction(n - 1, p1_len + d32)):
        val = Fraction(D(r3) - D(r1) + n - 1 - (p1_len + d32 + 1) * t_31)
        cases.append(CaseRecord(5, True, val))
    else:
        cases.append(CaseRecord(5, False, None))
    # Case 6: everything else
    others = any(c.premise_holds for c in cases)
    val6 = (Fraction(D(r3) - D(r1) + n - 1
                     + (k_max - (p1_len + d32 + 3)) * t_31) - alpha)
    cases.append(CaseRecord(
        6, not others, val6,
        note="ratio symbol read as gamma = d(r3,r2)/|P1|"))
    return CaseAudit(
        r1=r1, r2=r2, r3=r3, p1_len=p1_len, k_max=k_max,
        per_case=tuple(cases),
        notes=(
            "diagnostic evaluation; premises tested independently except case 6",
            "case 4 reads the proof's unbound vertex u as r3",
            "case 6 uses the gamma = d(r3,r2)/|P1| reading",
        ),
    )
