"""Exact best responses, Nash verdicts and equilibrium alpha-intervals.

Every deviation contributes the linear constraint
deltaBuild * alpha + deltaDist >= 0, a half-line in alpha.  The set of alpha
values at which a profile is a Nash equilibrium is the intersection of these
half-lines, so it is an interval with rational endpoints and can be computed
once per profile without scanning an alpha grid.

Equilibrium is weak: ties (cost change exactly 0) do not break it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .errors import BudgetExceededError
from .game import DeviationDelta, OwnedGraph, bfs_distances, deviated_adjacency
from .graph import INF

DEFAULT_MAX_TARGETS = 20


def max_enumeration_targets() -> int:
    """Cap on per-vertex deviation targets; NCG_BUDGET overrides."""
    raw = os.environ.get("NCG_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_TARGETS


@dataclass(frozen=True)
class NashVerdict:
    is_equilibrium: bool
    witness: tuple[int, frozenset[int], DeviationDelta] | None = None


@dataclass(frozen=True)
class AlphaInterval:
    """Exact rational interval of alpha values; lower bound 0 is always open
    (the model requires alpha > 0), an absent upper bound means unbounded."""

    empty: bool = False
    lower: Fraction = Fraction(0)
    lower_closed: bool = False
    upper: Fraction | None = None  # None = unbounded
    upper_closed: bool = False

    def contains(self, alpha: Fraction) -> bool:
        if self.empty:
            return False
        if alpha < self.lower or (alpha == self.lower and not self.lower_closed):
            return False
        if self.upper is not None:
            if alpha > self.upper or (alpha == self.upper and not self.upper_closed):
                return False
        return True

    def intersects(self, lo: Fraction, hi: Fraction | None,
                   lo_closed: bool = True, hi_closed: bool = True) -> bool:
        """Does the interval meet [lo, hi] (hi=None meaning +infinity)?"""
        if self.empty:
            return False
        if self.upper is not None:
            if self.upper < lo or (self.upper == lo and not (self.upper_closed and lo_closed)):
                return False
        if hi is not None:
            if self.lower > hi or (self.lower == hi and not (self.lower_closed and hi_closed)):
                return False
        return True

    def to_json(self) -> dict:
        if self.empty:
            return {"empty": True}
        return {
            "empty": False,
            "lower": str(self.lower),
            "lowerClosed": self.lower_closed,
            "upper": None if self.upper is None else str(self.upper),
            "upperClosed": self.upper_closed,
        }


class _IntervalBuilder:
    def __init__(self) -> None:
        self.lower = Fraction(0)
        self.lower_closed = False
        self.upper: Fraction | None = None
        self.upper_closed = False
        self.empty = False

    def add_constraint(self, delta: DeviationDelta) -> None:
        """Impose delta_build * alpha + delta_dist >= 0."""
        if self.empty:
            return
        db, dd = delta.delta_build, delta.delta_dist
        if dd == INF:
            return  # never improving, no constraint
        if dd == -INF:
            self.empty = True  # reconnecting move: improving at every alpha
            return
        if db == 0:
            if dd < 0:
                self.empty = True
            return
        bound = Fraction(-int(dd), db)
        if db > 0:
            # alpha >= bound
            if bound > self.lower:
                self.lower, self.lower_closed = bound, True
        else:
            # alpha <= bound
            if self.upper is None or bound < self.upper:
                self.upper, self.upper_closed = bound, True
        self._check()

    def _check(self) -> None:
        if self.upper is None:
            return
        if self.upper < self.lower:
            self.empty = True
        elif self.upper == self.lower and not (self.lower_closed and self.upper_closed):
            self.empty = True
        elif self.upper <= 0:
            self.empty = True  # alpha must be positive

    def build(self) -> AlphaInterval:
        if self.empty:
            return AlphaInterval(empty=True)
        return AlphaInterval(
            empty=False,
            lower=self.lower,
            lower_closed=self.lower_closed,
            upper=self.upper,
            upper_closed=self.upper_closed,
        )


def eligible_targets(g: OwnedGraph, v: int) -> list[int]:
    """Vertices v may buy an edge to: everyone except itself and endpoints
    that already own an edge to v (buying those is strictly dominated)."""
    out = []
    for u in range(g.n):
        if u == v:
            continue
        if g.has_edge(u, v) and g.owner_of(u, v) == u:
            continue
        out.append(u)
    return out


def enumerate_deviations(
    g: OwnedGraph, v: int, max_targets: int | None = None
) -> Iterator[frozenset[int]]:
    """All candidate owned-vertex sets for v, the current one included.

    Emitted in deterministic order: by size, then lexicographically.
    """
    g.check_vertex(v)
    targets = eligible_targets(g, v)
    cap = max_targets if max_targets is not None else max_enumeration_targets()
    if len(targets) > cap:
        raise BudgetExceededError(
            f"{len(targets)} deviation targets for vertex {v} exceed budget {cap}"
        )
    for size in range(len(targets) + 1):
        for combo in combinations(targets, size):
            yield frozenset(combo)


def _dist_sum_from(adj: list[list[int]], v: int, n: int) -> float:
    dist = bfs_distances(adj, v)
    total = 0
    for u in range(n):
        if u == v:
            continue
        if dist[u] == INF:
            return INF
        total += int(dist[u])
    return total


def _deltas_for_vertex(
    g: OwnedGraph, v: int, max_targets: int | None = None
) -> Iterator[tuple[frozenset[int], DeviationDelta]]:
    """Deviation deltas for every non-identity deviation of v."""
    current = g.owned_targets(v)
    base_sum = _dist_sum_from([list(a) for a in g.adjacency], v, g.n)
    for s in enumerate_deviations(g, v, max_targets=max_targets):
        if s == current:
            continue
        adj = deviated_adjacency(g, v, s)
        after = _dist_sum_from(adj, v, g.n)
        if after == INF:
            dd: float = INF
        elif base_sum == INF:
            dd = -INF
        else:
            dd = after - base_sum
        yield s, DeviationDelta(delta_build=len(s) - len(current), delta_dist=dd)


def best_response(
    g: OwnedGraph, v: int, alpha: Fraction, max_targets: int | None = None
) -> tuple[Fraction | float, list[frozenset[int]]]:
    """Exact minimum cost over all enumerated strategies for v, with every
    argmin strategy (the current one competes too)."""
    best_cost: Fraction | float = INF
    witnesses: list[frozenset[int]] = []
    base_adj = [list(a) for a in g.adjacency]
    current = g.owned_targets(v)
    for s in enumerate_deviations(g, v, max_targets=max_targets):
        adj = base_adj if s == current else deviated_adjacency(g, v, s)
        dsum = _dist_sum_from(adj, v, g.n)
        cost = INF if dsum == INF else alpha * len(s) + dsum
        if cost < best_cost:
            best_cost = cost
            witnesses = [s]
        elif cost == best_cost and cost != INF:
            witnesses.append(s)
    witnesses.sort(key=lambda s: tuple(sorted(s)))
    return best_cost, witnesses


def is_nash(
    g: OwnedGraph, alpha: Fraction, max_targets: int | None = None
) -> NashVerdict:
    """Weak Nash test: no vertex has a strictly cost-reducing deviation."""
    for v in range(g.n):
        for s, delta in _deltas_for_vertex(g, v, max_targets=max_targets):
            change = delta.cost_change(alpha)
            if change == INF:
                continue
            if change < 0 or delta.delta_dist == -INF:
                return NashVerdict(is_equilibrium=False, witness=(v, s, delta))
    return NashVerdict(is_equilibrium=True)


def nash_alpha_interval(
    g: OwnedGraph, max_targets: int | None = None
) -> AlphaInterval:
    """The exact set of alpha > 0 at which g is a Nash equilibrium."""
    if not g.is_connected():
        return AlphaInterval(empty=True)
    builder = _IntervalBuilder()
    for v in range(g.n):
        for _s, delta in _deltas_for_vertex(g, v, max_targets=max_targets):
            builder.add_constraint(delta)
            if builder.empty:
                return AlphaInterval(empty=True)
    return builder.build()
