"""Exhaustive profile enumeration, equilibrium census and dynamics.

A profile on n vertices is a choice, per unordered pair, of absent /
owned-by-lower / owned-by-upper, so there are 3^(n(n-1)/2) labeled profiles.
The census computes each profile's exact Nash alpha-interval once (deviation
deltas are alpha-independent) and keeps one record per ownership-respecting
isomorphism class, identified by the lexicographically minimal encoding over
all vertex permutations.

The scan phase only collects canonical ids; records are rebuilt afterwards
from the decoded canonical representatives.  This makes the worker merge a
plain set union, so output is byte-identical for any worker count.
"""

from __future__ import annotations

import enum
import json
import multiprocessing
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from typing import Iterator

from .engine import (
    AlphaInterval,
    best_response,
    enumerate_deviations,
    is_nash,
    nash_alpha_interval,
)
from .errors import BudgetExceededError
from .game import DeviationDelta, OwnedGraph, deviation_delta, vertex_cost
from .graph import INF, build_graph, girth
from .lemmas import check_tree, run_all, summarize

LABELED_N_CAP = 6
CANONICAL_N_CAP = 8
CENSUS_PARTITIONS = 64


class EnumMode(enum.Enum):
    LABELED = "LABELED"
    CANONICAL = "CANONICAL"


# ---------------------------------------------------------------------------
# Encoding and canonical form


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def encode_profile(g: OwnedGraph) -> str:
    """Digit per pair (lex pair order): 0 absent, 1 lower owns, 2 upper owns."""
    digits = []
    for i, j in _pairs(g.n):
        if not g.has_edge(i, j):
            digits.append("0")
        else:
            digits.append("1" if g.owner_of(i, j) == i else "2")
    return "".join(digits)


def decode_profile(n: int, code: str) -> OwnedGraph:
    edges = []
    for (i, j), d in zip(_pairs(n), code):
        if d == "1":
            edges.append((i, j, i))
        elif d == "2":
            edges.append((i, j, j))
    return build_graph(n, edges)


def _encoded_under(g: OwnedGraph, perm: tuple[int, ...]) -> str:
    digits = []
    for i, j in _pairs(g.n):
        # preimage pair: perm maps old -> new, so look at vertices mapping to i, j
        a, b = perm.index(i), perm.index(j)
        if not g.has_edge(a, b):
            digits.append("0")
        else:
            owner_new = perm[g.owner_of(a, b)]
            digits.append("1" if owner_new == i else "2")
    return "".join(digits)


def canonical_profile_id(g: OwnedGraph) -> str:
    """Lex-minimal encoding over all vertex permutations (exact, n <= 8)."""
    if g.n > CANONICAL_N_CAP:
        raise BudgetExceededError(
            f"canonical form is exact only up to n={CANONICAL_N_CAP}"
        )
    return min(_encoded_under(g, p) for p in permutations(range(g.n)))


def enumerate_profiles(
    n: int, mode: EnumMode = EnumMode.LABELED, n_cap: int | None = None
) -> Iterator[OwnedGraph]:
    """All labeled profiles, or one representative per isomorphism class.

    Canonical representatives are exactly the profiles that equal their own
    canonical id, so both modes share one deterministic enumeration order.
    """
    cap = n_cap if n_cap is not None else LABELED_N_CAP
    if n > cap:
        raise BudgetExceededError(
            f"n={n} exceeds enumeration budget {cap} (3^{n * (n - 1) // 2} states)"
        )
    m = n * (n - 1) // 2
    for idx in range(3 ** m):
        code = _index_to_code(idx, m)
        g = decode_profile(n, code)
        if mode is EnumMode.CANONICAL and canonical_profile_id(g) != code:
            continue
        yield g


def _index_to_code(idx: int, m: int) -> str:
    digits = []
    for _ in range(m):
        digits.append(str(idx % 3))
        idx //= 3
    return "".join(reversed(digits))


# ---------------------------------------------------------------------------
# Census


@dataclass(frozen=True)
class CensusRecord:
    canonical_id: str
    n: int
    nash_interval: AlphaInterval
    is_tree: bool
    girth: float  # INF for forests
    component_summary: dict = field(default_factory=dict)
    lemma_summary: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "canonicalId": self.canonical_id,
            "n": self.n,
            "nashInterval": self.nash_interval.to_json(),
            "isTree": self.is_tree,
            "girth": None if self.girth == INF else int(self.girth),
            "componentSummary": self.component_summary,
            "lemmaSummary": self.lemma_summary,
        }


def interval_sample_points(iv: AlphaInterval) -> list[Fraction]:
    """Three alpha values inside a nonempty interval (repeats allowed)."""
    assert not iv.empty
    if iv.upper is None:
        base = iv.lower if (iv.lower_closed and iv.lower > 0) else iv.lower + 1
        return [base, base + 1, base + 2]
    mid = (iv.lower + iv.upper) / 2
    lo = iv.lower if (iv.lower_closed and iv.lower > 0) else mid
    hi = iv.upper if iv.upper_closed else mid
    return [lo, mid, hi]


def _component_summary(g: OwnedGraph) -> dict:
    from .cycles import biconnected_components

    comps = biconnected_components(g)
    cyclic = [c for c in comps if c.is_cyclic]
    return {
        "components": len(comps),
        "cyclic": len(cyclic),
        "bridges": sum(1 for c in comps if not c.is_cyclic),
        "kMax": max((c.k_max for c in cyclic), default=None),
    }


def _record_for(canonical_id: str, n: int, with_lemmas: bool) -> CensusRecord:
    g = decode_profile(n, canonical_id)
    iv = nash_alpha_interval(g)
    lemma_summary: dict = {}
    if with_lemmas and not iv.empty:
        total = {"PASS": 0, "FAIL": 0, "VACUOUS": 0}
        for alpha in interval_sample_points(iv):
            for k, v in summarize(run_all(g, alpha)).items():
                total[k] += v
        lemma_summary = total
    return CensusRecord(
        canonical_id=canonical_id,
        n=n,
        nash_interval=iv,
        is_tree=check_tree(g),
        girth=girth(g),
        component_summary=_component_summary(g),
        lemma_summary=lemma_summary,
    )


def _scan_range(args: tuple[int, int, int, bool]) -> list[str]:
    """Canonical ids of nonempty-interval profiles in a labeled index range."""
    n, start, stop, canonical_mode = args
    m = n * (n - 1) // 2
    found: set[str] = set()
    for idx in range(start, stop):
        code = _index_to_code(idx, m)
        g = decode_profile(n, code)
        if canonical_mode and canonical_profile_id(g) != code:
            continue
        if not g.is_connected():
            continue
        if not nash_alpha_interval(g).empty:
            found.add(canonical_profile_id(g))
    return sorted(found)


def census(
    n: int,
    mode: EnumMode = EnumMode.LABELED,
    workers: int = 1,
    checkpoint_dir: str | Path | None = None,
    with_lemmas: bool = True,
    n_cap: int | None = None,
) -> list[CensusRecord]:
    """One record per equilibrium class, sorted by canonical id.

    The labeled index space is split into fixed partitions (independent of
    the worker count); completed partition indices are checkpointed so long
    runs can resume.
    """
    cap = n_cap if n_cap is not None else LABELED_N_CAP
    if n > cap:
        raise BudgetExceededError(f"n={n} exceeds census budget {cap}")
    m = n * (n - 1) // 2
    total = 3 ** m
    parts = min(CENSUS_PARTITIONS, total)
    bounds = [
        (total * i // parts, total * (i + 1) // parts) for i in range(parts)
    ]
    done: set[int] = set()
    ids: set[str] = set()
    ckpt = Path(checkpoint_dir) if checkpoint_dir is not None else None
    if ckpt is not None:
        ckpt.mkdir(parents=True, exist_ok=True)
        done_file = ckpt / "done.txt"
        if done_file.exists():
            done = {int(x) for x in done_file.read_text().split()}
        for i in sorted(done):
            part_file = ckpt / f"part-{i}.json"
            ids.update(json.loads(part_file.read_text()))
    todo = [i for i in range(parts) if i not in done]
    tasks = [(n, bounds[i][0], bounds[i][1], mode is EnumMode.CANONICAL)
             for i in todo]
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_scan_range, tasks)
    else:
        results = [_scan_range(t) for t in tasks]
    for i, found in zip(todo, results):
        ids.update(found)
        if ckpt is not None:
            (ckpt / f"part-{i}.json").write_text(json.dumps(found))
            done.add(i)
            (ckpt / "done.txt").write_text(
                "\n".join(str(x) for x in sorted(done)) + "\n"
            )
    return [_record_for(cid, n, with_lemmas) for cid in sorted(ids)]


def nontree_violations(
    records: list[CensusRecord], lo: Fraction, lo_closed: bool = False
) -> list[CensusRecord]:
    """Non-tree records whose interval meets (lo, inf) (or [lo, inf))."""
    return [
        r for r in records
        if not r.is_tree
        and r.nash_interval.intersects(lo, None, lo_closed=lo_closed)
    ]


def hunt_nontree(
    n: int,
    lo: Fraction,
    hi: Fraction | None = None,
    lo_closed: bool = True,
    hi_closed: bool = True,
    mode: EnumMode = EnumMode.LABELED,
    workers: int = 1,
    n_cap: int | None = None,
) -> list[CensusRecord]:
    """All non-tree equilibrium classes whose interval meets the alpha query."""
    records = census(n, mode=mode, workers=workers, with_lemmas=False,
                     n_cap=n_cap)
    return [
        r for r in records
        if not r.is_tree
        and r.nash_interval.intersects(lo, hi, lo_closed=lo_closed,
                                       hi_closed=hi_closed)
    ]


# ---------------------------------------------------------------------------
# Best-response dynamics


class Policy(enum.Enum):
    BEST_RESPONSE = "BEST_RESPONSE"
    FIRST_IMPROVEMENT = "FIRST_IMPROVEMENT"


class Schedule(enum.Enum):
    ROUND_ROBIN = "ROUND_ROBIN"
    RANDOM = "RANDOM"


class Status(enum.Enum):
    CONVERGED = "CONVERGED"
    BUDGET_EXHAUSTED = "BUDGET_EXHAUSTED"
    CYCLE_DETECTED = "CYCLE_DETECTED"


@dataclass(frozen=True)
class TrajectoryStep:
    mover: int
    deviation: frozenset[int]
    delta: DeviationDelta
    profile_code: str


@dataclass(frozen=True)
class Trajectory:
    steps: tuple[TrajectoryStep, ...]
    status: Status
    final: OwnedGraph


def _improving_move(
    g: OwnedGraph, v: int, alpha: Fraction, policy: Policy
) -> tuple[frozenset[int], DeviationDelta] | None:
    """A strictly improving strategy for v, or None.

    BEST_RESPONSE picks a cost-minimizing strategy (lexicographically smallest
    among ties); FIRST_IMPROVEMENT takes the first improving strategy in
    enumeration order.
    """
    current = g.owned_targets(v)
    if policy is Policy.FIRST_IMPROVEMENT:
        for s in enumerate_deviations(g, v):
            if s == current:
                continue
            delta = deviation_delta(g, v, s)
            if delta.cost_change(alpha) < 0 or delta.delta_dist == -INF:
                return s, delta
        return None
    best_cost, witnesses = best_response(g, v, alpha)
    cur_cost = vertex_cost(g, v, alpha)
    if best_cost < cur_cost and witnesses:
        s = witnesses[0]  # already sorted lexicographically
        return s, deviation_delta(g, v, s)
    return None


def dynamics(
    g0: OwnedGraph,
    alpha: Fraction,
    policy: Policy = Policy.BEST_RESPONSE,
    schedule: Schedule = Schedule.ROUND_ROBIN,
    seed: int = 0,
    max_rounds: int = 100,
) -> Trajectory:
    """Iterated strict-improvement play; deterministic given (policy,
    schedule, seed)."""
    from .game import apply_deviation

    g = g0
    steps: list[TrajectoryStep] = []
    seen = {encode_profile(g)}
    rng = random.Random(seed)
    for _round in range(max_rounds):
        moved = False
        order = (list(range(g.n)) if schedule is Schedule.ROUND_ROBIN
                 else [rng.randrange(g.n) for _ in range(g.n)])
        for v in order:
            found = _improving_move(g, v, alpha, policy)
            if found is None:
                continue
            s, delta = found
            g = apply_deviation(g, v, s)
            code = encode_profile(g)
            steps.append(TrajectoryStep(mover=v, deviation=s, delta=delta,
                                        profile_code=code))
            moved = True
            if code in seen:
                return Trajectory(tuple(steps), Status.CYCLE_DETECTED, g)
            seen.add(code)
        if not moved and is_nash(g, alpha).is_equilibrium:
            return Trajectory(tuple(steps), Status.CONVERGED, g)
    return Trajectory(tuple(steps), Status.BUDGET_EXHAUSTED, g)
