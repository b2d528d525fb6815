"""Undirected graphs with edge ownership and exact unweighted distances.

Vertices are integers 0..n-1.  Every edge records which endpoint bought it.
Ownership never restricts traversal; it only matters for cost accounting.
Unreachable pairs get the absorbing marker INF (never an integer sentinel).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicatePairError,
    IndexOutOfRangeError,
    NoSuchEdgeError,
    OwnerNotEndpointError,
    SelfLoopError,
)

INF = float("inf")


@dataclass(frozen=True, order=True)
class Edge:
    u: int
    v: int
    owner: int

    def key(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u < self.v else (self.v, self.u)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class OwnedGraph:
    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def edge_map(self) -> dict[tuple[int, int], Edge]:
        return {e.key(): e for e in self.edges}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def distance_matrix(self) -> tuple[tuple[float, ...], ...]:
        return tuple(tuple(bfs_distances(self.adjacency, v)) for v in range(self.n))

    def dist(self, u: int, v: int) -> float:
        return self.distance_matrix[u][v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_map

    def owner_of(self, u: int, v: int) -> int:
        e = self.edge_map.get((min(u, v), max(u, v)))
        if e is None:
            raise NoSuchEdgeError(f"no edge {{{u},{v}}}")
        return e.owner

    def owned_by(self, v: int) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.owner == v)

    def owned_targets(self, v: int) -> frozenset[int]:
        """Endpoints that v bought an edge to."""
        return frozenset(e.other(v) for e in self.edges if e.owner == v)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return all(d < INF for d in self.distance_matrix[0])

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise IndexOutOfRangeError(f"vertex {v} not in [0, {self.n})")


def build_graph(n: int, edges: Iterable[tuple[int, int, int]]) -> OwnedGraph:
    """Validate and normalize a strategy profile into an OwnedGraph."""
    if n < 0:
        raise IndexOutOfRangeError("vertex count must be non-negative")
    seen: set[tuple[int, int]] = set()
    out: list[Edge] = []
    for u, v, owner in edges:
        for x in (u, v, owner):
            if not (0 <= x < n):
                raise IndexOutOfRangeError(f"vertex {x} not in [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicatePairError(f"two edge records on pair {key}")
        if owner not in (u, v):
            raise OwnerNotEndpointError(f"owner {owner} not an endpoint of {key}")
        seen.add(key)
        out.append(Edge(key[0], key[1], owner))
    return OwnedGraph(n=n, edges=tuple(sorted(out)))


def bfs_distances(
    adjacency: Sequence[Sequence[int]],
    source: int,
    blocked_vertex: int | None = None,
    blocked_edge: tuple[int, int] | None = None,
) -> list[float]:
    """Hop distances from source, optionally with one vertex or edge deleted."""
    n = len(adjacency)
    dist: list[float] = [INF] * n
    if source == blocked_vertex:
        return dist
    dist[source] = 0
    q = deque([source])
    be = None
    if blocked_edge is not None:
        a, b = blocked_edge
        be = (min(a, b), max(a, b))
    while q:
        x = q.popleft()
        dx = dist[x]
        for y in adjacency[x]:
            if y == blocked_vertex:
                continue
            if be is not None and (min(x, y), max(x, y)) == be:
                continue
            if dist[y] == INF:
                dist[y] = dx + 1
                q.append(y)
    return dist


def distances_from(g: OwnedGraph, v: int) -> list[float]:
    g.check_vertex(v)
    return list(g.distance_matrix[v])


def connection_cost(g: OwnedGraph, v: int) -> float:
    """D(v): sum of hop distances from v to every other vertex (INF absorbs)."""
    g.check_vertex(v)
    row = g.distance_matrix[v]
    total = 0
    for u in range(g.n):
        if u == v:
            continue
        if row[u] == INF:
            return INF
        total += int(row[u])
    return total


def girth(g: OwnedGraph) -> float:
    """Length of the shortest cycle; INF for forests.

    For each edge, the shortest cycle through it is 1 + the distance between
    its endpoints with the edge removed.
    """
    best = INF
    for e in g.edges:
        d = bfs_distances(g.adjacency, e.u, blocked_edge=(e.u, e.v))[e.v]
        if d + 1 < best:
            best = d + 1
    return best
