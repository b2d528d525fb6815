"""Small named profiles used across tests, docs and the CLI examples."""

from __future__ import annotations

from .graph import OwnedGraph, build_graph


def star4() -> OwnedGraph:
    """Star on 4 vertices, center 0; each leaf buys its edge to the center."""
    return build_graph(4, [(1, 0, 1), (2, 0, 2), (3, 0, 3)])


def path3() -> OwnedGraph:
    return build_graph(3, [(0, 1, 0), (1, 2, 2)])


def cyc(k: int) -> OwnedGraph:
    """Directed k-cycle: v_i buys the edge to v_{i+1}."""
    return build_graph(k, [(i, (i + 1) % k, i) for i in range(k)])


def cyc5() -> OwnedGraph:
    return cyc(5)


def cyc4() -> OwnedGraph:
    return cyc(4)


def cyc5_pendant() -> OwnedGraph:
    """Directed 5-cycle plus pendant vertex 5 buying an edge to v0."""
    edges = [(i, (i + 1) % 5, i) for i in range(5)] + [(5, 0, 5)]
    return build_graph(6, edges)


def k4lex() -> OwnedGraph:
    """Complete graph on 4 vertices; the lower-indexed endpoint owns."""
    return build_graph(4, [(u, v, u) for u in range(4) for v in range(u + 1, 4)])


def k4_pendant() -> OwnedGraph:
    edges = [(u, v, u) for u in range(4) for v in range(u + 1, 4)] + [(4, 3, 4)]
    return build_graph(5, edges)


def theta() -> OwnedGraph:
    """Vertices 0 and 1 joined by three internally disjoint 2-edge paths."""
    edges = [(0, 2, 0), (2, 1, 2), (0, 3, 0), (3, 1, 3), (0, 4, 0), (4, 1, 4)]
    return build_graph(5, edges)
