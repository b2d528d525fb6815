"""Cost model of the network creation game and exact deviation accounting.

A vertex pays alpha per edge it buys plus the sum of its distances to every
other vertex.  Every strategy change by one vertex shifts its cost by
deltaBuild * alpha + deltaDist, with integer deltas, so cost comparisons stay
exact for rational alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BuysExistingEdgeError, SelfTargetError
from .graph import INF, Edge, OwnedGraph, bfs_distances, connection_cost

Alpha = Fraction


@dataclass(frozen=True)
class CostBreakdown:
    build_count: int
    dist_sum: float  # hop sum, or INF when disconnected

    def total(self, alpha: Fraction) -> Fraction | float:
        if self.dist_sum == INF:
            return INF
        return alpha * self.build_count + self.dist_sum


@dataclass(frozen=True)
class DeviationDelta:
    delta_build: int
    delta_dist: float  # signed integer, or INF on disconnection

    def cost_change(self, alpha: Fraction) -> Fraction | float:
        if self.delta_dist == INF:
            return INF
        return alpha * self.delta_build + self.delta_dist


def cost_breakdown(g: OwnedGraph, v: int) -> CostBreakdown:
    g.check_vertex(v)
    return CostBreakdown(
        build_count=len(g.owned_targets(v)), dist_sum=connection_cost(g, v)
    )


def vertex_cost(g: OwnedGraph, v: int, alpha: Fraction) -> Fraction | float:
    return cost_breakdown(g, v).total(alpha)


def social_cost(g: OwnedGraph, alpha: Fraction) -> Fraction | float:
    total = Fraction(0)
    for v in range(g.n):
        c = vertex_cost(g, v, alpha)
        if c == INF:
            return INF
        total += c
    return total


def _check_new_owned_set(g: OwnedGraph, v: int, new_owned: frozenset[int]) -> None:
    if v in new_owned:
        raise SelfTargetError(f"vertex {v} cannot buy an edge to itself")
    for u in new_owned:
        g.check_vertex(u)
        if g.has_edge(u, v) and g.owner_of(u, v) == u:
            raise BuysExistingEdgeError(
                f"edge {{{v},{u}}} is already owned by {u}"
            )


def apply_deviation(g: OwnedGraph, v: int, new_owned: frozenset[int]) -> OwnedGraph:
    """Replace v's bought edges by edges to new_owned; everything else fixed."""
    new_owned = frozenset(new_owned)
    _check_new_owned_set(g, v, new_owned)
    edges = [e for e in g.edges if e.owner != v]
    for u in sorted(new_owned):
        edges.append(Edge(min(u, v), max(u, v), v))
    return OwnedGraph(n=g.n, edges=tuple(sorted(edges)))


def deviated_adjacency(g: OwnedGraph, v: int, new_owned: frozenset[int]) -> list[list[int]]:
    """Adjacency after the deviation, without building a full OwnedGraph."""
    adj = [list(a) for a in g.adjacency]
    for e in g.edges:
        if e.owner == v:
            adj[e.u].remove(e.v)
            adj[e.v].remove(e.u)
    for u in new_owned:
        adj[v].append(u)
        adj[u].append(v)
    return adj


def deviation_delta(g: OwnedGraph, v: int, new_owned: frozenset[int]) -> DeviationDelta:
    new_owned = frozenset(new_owned)
    _check_new_owned_set(g, v, new_owned)
    before = cost_breakdown(g, v)
    adj = deviated_adjacency(g, v, new_owned)
    dist = bfs_distances(adj, v)
    after_sum: float = 0
    for u in range(g.n):
        if u == v:
            continue
        if dist[u] == INF:
            after_sum = INF
            break
        after_sum += int(dist[u])
    if after_sum == INF:
        delta_dist: float = INF
    elif before.dist_sum == INF:
        # reconnecting from a disconnected start: treat as -INF-like; the
        # game never compares such moves, so keep it absorbing
        delta_dist = -INF
    else:
        delta_dist = after_sum - before.dist_sum
    return DeviationDelta(
        delta_build=len(new_owned) - before.build_count, delta_dist=delta_dist
    )
