"""Cycles, biconnected components, min-cycle enumeration, satellite sets.

A min-cycle (isometric cycle) realizes all graph distances between its own
vertices.  Enumeration goes through the Horton candidate family: for every
root r and edge (x,y), every shortest r-x path plus (x,y) plus every shortest
y-r path.  Iterating over *all* shortest paths (not one fixed tie-break)
guarantees every isometric cycle shows up as a candidate; the configurable
candidate budget guards against pathological inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import networkx as nx

from .errors import (
    CandidateBudgetExceededError,
    ComponentNotCyclicError,
    DisconnectedError,
    NoSuchEdgeError,
    NotACycleError,
)
from .graph import INF, OwnedGraph, bfs_distances

DEFAULT_CANDIDATE_FACTOR = 16


@dataclass
class Cycle:
    vertices: tuple[int, ...]
    is_min: bool | None = None
    is_chordless: bool | None = None
    is_directed: bool | None = None

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_keys(self) -> set[tuple[int, int]]:
        k = len(self.vertices)
        out = set()
        for i in range(k):
            a, b = self.vertices[i], self.vertices[(i + 1) % k]
            out.add((min(a, b), max(a, b)))
        return out

    def canonical_key(self) -> frozenset[int]:
        # min-cycles are chordless, hence determined by their vertex set
        return frozenset(self.vertices)


@dataclass
class BiconnectedComponent:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    is_cyclic: bool
    min_cycles: tuple[Cycle, ...] = field(default=())
    k_max: int | None = None


def _validate_cycle(g: OwnedGraph, c: Cycle) -> None:
    vs = c.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise NotACycleError(f"not a simple cycle: {vs}")
    for i in range(len(vs)):
        if not g.has_edge(vs[i], vs[(i + 1) % len(vs)]):
            raise NotACycleError(f"missing edge {vs[i]}-{vs[(i + 1) % len(vs)]}")


def is_min_cycle(g: OwnedGraph, c: Cycle) -> bool:
    vs = c.vertices
    k = len(vs)
    for i in range(k):
        for j in range(i + 1, k):
            d_c = min(j - i, k - (j - i))
            if g.dist(vs[i], vs[j]) != d_c:
                return False
    return True


def is_chordless(g: OwnedGraph, c: Cycle) -> bool:
    vs = c.vertices
    k = len(vs)
    for i in range(k):
        for j in range(i + 1, k):
            if (j - i) % k in (1, k - 1):
                continue
            if g.has_edge(vs[i], vs[j]):
                return False
    return True


def is_directed_cycle(g: OwnedGraph, c: Cycle) -> bool:
    """True iff ownership orients the cycle consistently one way around."""
    vs = c.vertices
    k = len(vs)
    for direction in (1, -1):
        if all(
            g.owner_of(vs[i], vs[(i + direction) % k]) == vs[i] for i in range(k)
        ):
            return True
    return False


def opposite_edges(c: Cycle, v: int) -> tuple[tuple[int, int], ...]:
    """The one (odd k) or two (even k) cycle edges maximally distant from v."""
    vs = c.vertices
    k = len(vs)
    i0 = vs.index(v)

    def cyc_dist(i: int, j: int) -> int:
        return min((i - j) % k, (j - i) % k)

    scored = []
    for i in range(k):
        a, b = vs[i], vs[(i + 1) % k]
        score = min(cyc_dist(i0, i), cyc_dist(i0, (i + 1) % k))
        scored.append((score, (min(a, b), max(a, b))))
    best = max(s for s, _ in scored)
    return tuple(sorted(e for s, e in scored if s == best))


def classify_cycle(
    g: OwnedGraph, c: Cycle
) -> tuple[bool, bool, bool, dict[int, tuple[tuple[int, int], ...]]]:
    """Fill the min/chordless/directed flags and report opposite edges."""
    _validate_cycle(g, c)
    c.is_min = is_min_cycle(g, c)
    c.is_chordless = is_chordless(g, c)
    c.is_directed = is_directed_cycle(g, c)
    opposite = {v: opposite_edges(c, v) for v in c.vertices}
    return c.is_min, c.is_chordless, c.is_directed, opposite


def smallest_cycle_through(g: OwnedGraph, edge: tuple[int, int]) -> Cycle | None:
    """A minimum-length cycle containing the edge, or None for a cut-edge.

    The result always passes the isometric test (a theorem for any graph),
    which is asserted here.
    """
    u, v = edge
    if not g.has_edge(u, v):
        raise NoSuchEdgeError(f"no edge {{{u},{v}}}")
    dist, parent = _bfs_with_parents(g, u, blocked_edge=(u, v))
    if dist[v] == INF:
        return None
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    c = Cycle(vertices=tuple(reversed(path)))
    classify_cycle(g, c)
    assert c.is_min, f"smallest cycle through {edge} is not isometric: {c.vertices}"
    return c


def _bfs_with_parents(g, source, blocked_edge=None):
    dist = bfs_distances(g.adjacency, source, blocked_edge=blocked_edge)
    parent: dict[int, int] = {}
    be = None
    if blocked_edge is not None:
        a, b = blocked_edge
        be = (min(a, b), max(a, b))
    for x in range(g.n):
        if dist[x] == INF or x == source:
            continue
        for y in g.adjacency[x]:
            if be is not None and (min(x, y), max(x, y)) == be:
                continue
            if dist[y] + 1 == dist[x]:
                parent[x] = y
                break
    return dist, parent


def biconnected_components(g: OwnedGraph) -> list[BiconnectedComponent]:
    """Total biconnected decomposition; bridges appear as 2-vertex acyclic
    components.  Cyclic components carry their min-cycle list and k_max."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from((e.u, e.v) for e in g.edges)
    out: list[BiconnectedComponent] = []
    for edge_set in nx.biconnected_component_edges(nxg):
        edges = frozenset((min(a, b), max(a, b)) for a, b in edge_set)
        vertices = frozenset(x for e in edges for x in e)
        cyclic = len(edges) >= len(vertices) and len(vertices) >= 3
        comp = BiconnectedComponent(vertices=vertices, edges=edges, is_cyclic=cyclic)
        if cyclic:
            comp.min_cycles = tuple(enumerate_min_cycles(g, comp))
            assert comp.min_cycles, "cyclic biconnected component without a min-cycle"
            comp.k_max = max(len(c) for c in comp.min_cycles)
        out.append(comp)
    out.sort(key=lambda c: sorted(c.vertices))
    return out


def _all_shortest_paths(
    adjacency, dist: list[float], target: int
) -> Iterator[tuple[int, ...]]:
    """All shortest source->target paths given a BFS distance vector."""
    if dist[target] == INF:
        return
    stack = [(target, (target,))]
    while stack:
        x, suffix = stack.pop()
        if dist[x] == 0:
            yield suffix
            continue
        for y in adjacency[x]:
            if dist[y] + 1 == dist[x]:
                stack.append((y, (y,) + suffix))


def enumerate_min_cycles(
    g: OwnedGraph,
    component: BiconnectedComponent,
    candidate_budget: int | None = None,
) -> list[Cycle]:
    """All min-cycles of a cyclic biconnected component, longest last."""
    if not component.is_cyclic:
        raise ComponentNotCyclicError("component has no cycle")
    if candidate_budget is None:
        candidate_budget = DEFAULT_CANDIDATE_FACTOR * g.n * max(1, len(g.edges))
    found: dict[frozenset[int], Cycle] = {}
    candidates = 0
    comp_vertices = sorted(component.vertices)
    comp_edges = sorted(component.edges)
    for r in comp_vertices:
        dist = g.distance_matrix[r]
        for x, y in comp_edges:
            # the opposite edge of an isometric cycle sits on adjacent levels
            if abs(dist[x] - dist[y]) > 1:
                continue
            for p1 in _all_shortest_paths(g.adjacency, list(dist), x):
                for p2 in _all_shortest_paths(g.adjacency, list(dist), y):
                    candidates += 1
                    if candidates > candidate_budget:
                        raise CandidateBudgetExceededError(
                            f"min-cycle candidates exceed budget {candidate_budget}"
                        )
                    if set(p1) & set(p2) != {r}:
                        continue
                    verts = p1 + tuple(reversed(p2[1:]))
                    if len(verts) < 3:
                        continue
                    cyc = Cycle(vertices=verts)
                    key = cyc.canonical_key()
                    if key in found:
                        continue
                    if is_min_cycle(g, cyc):
                        classify_cycle(g, cyc)
                        found[key] = cyc
    out = sorted(found.values(), key=lambda c: (len(c), sorted(c.vertices)))
    return out


def satellite_sets(
    g: OwnedGraph, component: BiconnectedComponent
) -> dict[int, set[int]]:
    """S_H(v): vertices of the whole graph whose closest component vertex is v.

    For a maximal biconnected component of a connected graph the closest
    vertex is unique, so the sets partition the vertex set; a tie would be an
    internal error and is asserted against.
    """
    if not g.is_connected():
        raise DisconnectedError("satellite sets need a connected graph")
    hs = sorted(component.vertices)
    sets: dict[int, set[int]] = {v: set() for v in hs}
    for x in range(g.n):
        dists = [(g.dist(x, v), v) for v in hs]
        best = min(d for d, _ in dists)
        arg = [v for d, v in dists if d == best]
        assert len(arg) == 1, f"vertex {x} equidistant to {arg} in component"
        sets[arg[0]].add(x)
    return sets
