"""Shared generators and independent oracles.

The oracles here deliberately avoid the package's own shortest-path and
constraint machinery: they lean on networkx and brute force so that
agreement with the package is meaningful evidence.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest

from ncgame.graph import OwnedGraph, build_graph


# ---------------------------------------------------------------------------
# Random profile generation


def random_connected_graph(rng: random.Random, n: int, extra_edges: int | None = None) -> OwnedGraph:
    """Random spanning tree plus a few extra edges, random ownership."""
    edges: dict[tuple[int, int], int] = {}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], rng.choice(order[:i])
        owner = rng.choice([u, v])
        edges[(min(u, v), max(u, v))] = owner
    if extra_edges is None:
        extra_edges = rng.randint(0, min(4, n * (n - 1) // 2 - (n - 1)))
    pool = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if (i, j) not in edges
    ]
    rng.shuffle(pool)
    for (i, j) in pool[:extra_edges]:
        edges[(i, j)] = rng.choice([i, j])
    return build_graph(n, [(u, v, o) for (u, v), o in edges.items()])


def random_profile(rng: random.Random, n: int) -> OwnedGraph:
    """Arbitrary (possibly disconnected) ownership profile."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            r = rng.random()
            if r < 1 / 3:
                continue
            edges.append((i, j, i if r < 2 / 3 else j))
    return build_graph(n, edges)


def to_nx(g: OwnedGraph) -> nx.Graph:
    gx = nx.Graph()
    gx.add_nodes_from(range(g.n))
    gx.add_edges_from((e.u, e.v) for e in g.edges)
    return gx


# ---------------------------------------------------------------------------
# Naive interval oracle (independent re-derivation)

INFINITY = float("inf")


def _naive_dist_sum(gx: nx.Graph, v: int, n: int) -> float:
    lengths = nx.single_source_shortest_path_length(gx, v)
    if len(lengths) < n:
        return INFINITY
    return sum(lengths.values())


def naive_constraints(g: OwnedGraph) -> list[tuple[int, float]]:
    """(deltaBuild, deltaDist) over every deviation of every vertex, computed
    with networkx on rebuilt graphs."""
    out = []
    base = to_nx(g)
    for v in range(g.n):
        owned = sorted(e.other(v) for e in g.edges if e.owner == v)
        others = [e for e in g.edges if e.owner != v]
        allowed = [
            u for u in range(g.n)
            if u != v and not any({e.u, e.v} == {u, v} for e in others)
        ]
        before = _naive_dist_sum(base, v, g.n)
        for size in range(len(allowed) + 1):
            for combo in itertools.combinations(allowed, size):
                if sorted(combo) == owned:
                    continue
                gx = nx.Graph()
                gx.add_nodes_from(range(g.n))
                gx.add_edges_from((e.u, e.v) for e in others)
                gx.add_edges_from((v, u) for u in combo)
                after = _naive_dist_sum(gx, v, g.n)
                if after == INFINITY:
                    dd: float = INFINITY
                elif before == INFINITY:
                    dd = -INFINITY
                else:
                    dd = after - before
                out.append((len(combo) - len(owned), dd))
    return out


def naive_interval(g: OwnedGraph):
    """Exact alpha-interval from scratch: intersect half-lines directly.

    Returns (empty, lower, lower_closed, upper, upper_closed) with upper None
    meaning unbounded.
    """
    if not nx.is_connected(to_nx(g)) if g.n > 1 else False:
        return (True, None, None, None, None)
    lower, lower_closed = Fraction(0), False
    upper: Fraction | None = None
    upper_closed = False
    for db, dd in naive_constraints(g):
        if dd == INFINITY:
            continue
        if dd == -INFINITY:
            return (True, None, None, None, None)
        if db == 0:
            if dd < 0:
                return (True, None, None, None, None)
            continue
        bound = Fraction(-int(dd), db)
        if db > 0:
            if bound > lower:
                lower, lower_closed = bound, True
        else:
            if upper is None or bound < upper:
                upper, upper_closed = bound, True
    if upper is not None:
        if upper < lower or (upper == lower and not (lower_closed and upper_closed)):
            return (True, None, None, None, None)
        if upper <= 0:
            return (True, None, None, None, None)
    return (False, lower, lower_closed, upper, upper_closed)


def naive_is_nash(g: OwnedGraph, alpha: Fraction) -> bool:
    if g.n > 1 and not nx.is_connected(to_nx(g)):
        return False
    for db, dd in naive_constraints(g):
        if dd == INFINITY:
            continue
        if dd == -INFINITY:
            return False
        if alpha * db + dd < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Brute-force shortest-path-tree enumeration (for SPT membership oracles)


def all_spt_parent_maps(g: OwnedGraph, root: int) -> list[dict[int, int]]:
    """Every shortest path tree rooted at root, as child -> parent maps."""
    gx = to_nx(g)
    dist = nx.single_source_shortest_path_length(gx, root)
    nodes = [x for x in dist if x != root]
    choices = []
    for x in nodes:
        parents = [y for y in gx.neighbors(x) if dist.get(y, INFINITY) + 1 == dist[x]]
        choices.append([(x, p) for p in parents])
    trees = []
    for combo in itertools.product(*choices):
        trees.append(dict(combo))
    return trees


def spt_below_vertex(parent: dict[int, int], pivot: int) -> set[int]:
    below = {pivot}
    changed = True
    while changed:
        changed = False
        for child, par in parent.items():
            if par in below and child not in below:
                below.add(child)
                changed = True
    return below


def spt_below_edge(parent: dict[int, int], a: int, b: int) -> set[int] | None:
    """Subtree below tree edge (a, b), or None when the tree lacks it."""
    if parent.get(b) != a:
        return None
    return spt_below_vertex(parent, b)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


@pytest.fixture(scope="session")
def census4():
    from ncgame.census import census

    return census(4, with_lemmas=False)


@pytest.fixture(scope="session")
def census5():
    """The n=5 labeled-exhaustive census; shared because it is the one
    genuinely slow computation in the suite."""
    from ncgame.census import census

    return census(5, with_lemmas=False, workers=4)
