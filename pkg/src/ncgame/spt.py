"""Shortest-path-tree subtree membership.

Whether a vertex lies in the subtree hanging below a pivot vertex (or below a
tree edge) depends on shortest-path tie-breaking.  Classification captures the
three possibilities:

  FORCED    in the subtree for every shortest path tree
  OPTIONAL  in the subtree for some trees but not others
  FORBIDDEN in the subtree for no tree

FORCED tests use deletion plus re-BFS rather than path counting.
"""

from __future__ import annotations

import enum

from .errors import (
    DegenerateQueryError,
    NotTreeLikeOrientationError,
    UnreachableError,
)
from .graph import INF, OwnedGraph, bfs_distances


class Membership(enum.Enum):
    FORCED = "FORCED"
    OPTIONAL = "OPTIONAL"
    FORBIDDEN = "FORBIDDEN"


def possible_under_vertex(g: OwnedGraph, root: int, pivot: int) -> set[int]:
    """Vertices that lie below `pivot` in at least one SPT rooted at `root`."""
    dr = g.distance_matrix[root]
    dp = g.distance_matrix[pivot]
    return {
        t
        for t in range(g.n)
        if t != root and dr[t] < INF and dr[pivot] + dp[t] == dr[t]
    }


def forced_under_vertex(g: OwnedGraph, root: int, pivot: int) -> set[int]:
    """Vertices below `pivot` in every SPT rooted at `root`.

    A target is forced iff deleting the pivot strictly increases its distance
    from the root (the pivot itself is always forced).
    """
    dr = g.distance_matrix[root]
    d_del = bfs_distances(g.adjacency, root, blocked_vertex=pivot)
    out = {pivot} if dr[pivot] < INF else set()
    for t in range(g.n):
        if t == root or t == pivot or dr[t] == INF:
            continue
        if d_del[t] > dr[t]:
            out.add(t)
    return out


def orient_edge(g: OwnedGraph, root: int, a: int, b: int) -> tuple[int, int] | None:
    """Orient {a,b} away from the root, or None if it is in no SPT."""
    dr = g.distance_matrix[root]
    if dr[a] + 1 == dr[b]:
        return (a, b)
    if dr[b] + 1 == dr[a]:
        return (b, a)
    return None


def possible_under_edge(g: OwnedGraph, root: int, a: int, b: int) -> set[int]:
    """Vertices reachable below the tree edge (a,b), d(root,b)=d(root,a)+1."""
    dr = g.distance_matrix[root]
    db = g.distance_matrix[b]
    return {
        t
        for t in range(g.n)
        if dr[t] < INF and t != root and dr[a] + 1 + db[t] == dr[t]
    }


def forced_under_edge(g: OwnedGraph, root: int, a: int, b: int) -> set[int]:
    dr = g.distance_matrix[root]
    d_del = bfs_distances(g.adjacency, root, blocked_edge=(a, b))
    return {
        t
        for t in range(g.n)
        if t != root and dr[t] < INF and d_del[t] > dr[t]
    }


def spt_membership_vertex(g: OwnedGraph, root: int, pivot: int, target: int) -> Membership:
    for x in (root, pivot, target):
        g.check_vertex(x)
    if pivot == root:
        raise DegenerateQueryError("pivot equals root")
    dr = g.distance_matrix[root]
    if dr[pivot] == INF or dr[target] == INF or g.dist(pivot, target) == INF:
        raise UnreachableError("root, pivot and target must be pairwise reachable")
    if target == pivot:
        return Membership.FORCED
    if dr[pivot] + g.dist(pivot, target) != dr[target]:
        return Membership.FORBIDDEN
    d_del = bfs_distances(g.adjacency, root, blocked_vertex=pivot)
    if d_del[target] > dr[target]:
        return Membership.FORCED
    return Membership.OPTIONAL


def spt_membership_edge(
    g: OwnedGraph, root: int, edge: tuple[int, int], target: int
) -> Membership:
    a, b = edge
    for x in (root, a, b, target):
        g.check_vertex(x)
    dr = g.distance_matrix[root]
    if dr[a] + 1 != dr[b]:
        raise NotTreeLikeOrientationError(
            f"edge ({a},{b}) is not oriented one BFS level down from root {root}"
        )
    if dr[target] == INF:
        raise UnreachableError("target unreachable from root")
    if dr[a] + 1 + g.dist(b, target) != dr[target]:
        return Membership.FORBIDDEN
    d_del = bfs_distances(g.adjacency, root, blocked_edge=(a, b))
    if d_del[target] > dr[target]:
        return Membership.FORCED
    return Membership.OPTIONAL


def subtree_bounds(
    g: OwnedGraph, root: int, pivot: int | tuple[int, int]
) -> tuple[int, int]:
    """(min, max) size of the subtree below a vertex or edge over all SPTs.

    Both extremes are realizable: optional targets can be simultaneously
    excluded (each has an ancestor chain avoiding the pivot) or included.
    """
    if isinstance(pivot, tuple):
        a, b = pivot
        # normalize orientation; raise if the edge is in no SPT
        dr = g.distance_matrix[root]
        if dr[b] + 1 == dr[a]:
            a, b = b, a
        elif dr[a] + 1 != dr[b]:
            raise NotTreeLikeOrientationError(
                f"edge {pivot} is not oriented from root {root}"
            )
        forced = forced_under_edge(g, root, a, b)
        possible = possible_under_edge(g, root, a, b)
    else:
        if pivot == root:
            raise DegenerateQueryError("pivot equals root")
        if g.dist(root, pivot) == INF:
            raise UnreachableError("pivot unreachable from root")
        forced = forced_under_vertex(g, root, pivot)
        possible = possible_under_vertex(g, root, pivot)
    return len(forced), len(forced | possible)
