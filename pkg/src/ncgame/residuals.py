"""Evaluators for the three canonical strategy-change bounds.

Each evaluator computes two numbers for a concrete strategy change:

  boundValue  the right-hand side of the change's cost-change upper bound,
              evaluated with subtree sizes minimized over shortest-path-tree
              tie-breaking (the derivations are valid for any admissible
              tie-break, so the minimal subtree gives the tightest sound bound)
  exactDelta  the true cost change of the literal strategy change, computed
              from ground-truth deviation accounting

Soundness (exactDelta <= boundValue) holds whenever preconditions_met is
true, equilibrium or not.  At a Nash equilibrium the bounds are additionally
non-negative; that is the inequality the analysis uses.

The derivations require the swap target u to be a non-neighbor of v.  When
the edge uv already exists and v owns it, the evaluators still return a
report (the literal change then keeps uv and just sells the other edges) but
mark preconditions_met false: the bound is not guaranteed to dominate the
exact delta in that regime.  Buying an edge the counterpart owns stays
excluded and raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .cycles import BiconnectedComponent, biconnected_components, smallest_cycle_through
from .errors import PreconditionFailedError
from .game import OwnedGraph, deviation_delta
from .graph import INF, connection_cost
from .spt import (
    forced_under_edge,
    forced_under_vertex,
    orient_edge,
    possible_under_edge,
    possible_under_vertex,
)


@dataclass(frozen=True)
class ResidualReport:
    strategy_kind: Literal["I", "II", "III"]
    bound_value: Fraction
    exact_delta: Fraction
    preconditions_met: bool
    details: dict
    simplified_bound: Fraction | None = None  # Strategy II only


def _cyclic_component_with(g: OwnedGraph, u: int, v: int) -> BiconnectedComponent:
    for comp in biconnected_components(g):
        if comp.is_cyclic and u in comp.vertices and v in comp.vertices:
            return comp
    raise PreconditionFailedError(
        f"vertices {u} and {v} do not share a cyclic biconnected component"
    )


def _check_swap_target(g: OwnedGraph, u: int, v: int) -> bool:
    """True when the uv-absent precondition holds; raises on hard failures."""
    if u == v:
        raise PreconditionFailedError("swap target equals the deviating vertex")
    if not g.has_edge(u, v):
        return True
    if g.owner_of(u, v) == u:
        raise PreconditionFailedError(
            f"edge {{{u},{v}}} owned by {u}; buying it is excluded"
        )
    return False


def _require_owned(g: OwnedGraph, v: int, w: int, label: str) -> None:
    if not (g.has_edge(v, w) and g.owner_of(v, w) == v):
        raise PreconditionFailedError(f"{v} does not own the {label} edge to {w}")


def _exact_dist_delta(g: OwnedGraph, v: int, new_owned: frozenset[int]) -> int:
    delta = deviation_delta(g, v, new_owned)
    if delta.delta_dist in (INF, -INF):
        raise PreconditionFailedError("literal strategy change disconnects the graph")
    return int(delta.delta_dist)


def strategy_residual_I(g: OwnedGraph, u: int, v: int, w: int) -> ResidualReport:
    """v swaps its edge vw for vu.

    boundValue = D(u) + (n-1) - D(v) - (d(u,v)+1) * |T_u(v)|
    with |T_u(v)| the minimal subtree below v in an SPT rooted at u that
    keeps w outside it.  The literal change moves no money (one sale, one
    purchase), so exactDelta is the distance-sum change.
    """
    for x in (u, v, w):
        g.check_vertex(x)
    _require_owned(g, v, w, "swapped")
    uv_absent = _check_swap_target(g, u, v)
    if u == w:
        raise PreconditionFailedError("swap target equals the sold edge's endpoint")
    comp = _cyclic_component_with(g, u, v)
    if (min(v, w), max(v, w)) not in comp.edges:
        raise PreconditionFailedError("sold edge vw lies outside the component")
    forced_v = forced_under_vertex(g, u, v)
    if w in forced_v:
        raise PreconditionFailedError(
            f"vertex {w} is forced below {v} in every SPT rooted at {u}"
        )
    du, dv = connection_cost(g, u), connection_cost(g, v)
    if du == INF or dv == INF:
        raise PreconditionFailedError("graph is disconnected")
    subtree = len(forced_v)
    bound = Fraction(int(du) + (g.n - 1) - int(dv) - (int(g.dist(u, v)) + 1) * subtree)
    new_owned = (g.owned_targets(v) - {w}) | {u}
    exact = Fraction(_exact_dist_delta(g, v, new_owned))
    details = {"subtree_size": subtree, "d_uv": int(g.dist(u, v))}
    if not uv_absent:
        details["unmet"] = "edge uv already present"
    return ResidualReport(
        strategy_kind="I",
        bound_value=bound,
        exact_delta=exact,
        preconditions_met=uv_absent,
        details=details,
    )


def _edge_subtree_min(g: OwnedGraph, root: int, a: int, b: int) -> int:
    """Minimal |T_root(e)| over SPT tie-breaks; 0 if e is in no SPT."""
    oriented = orient_edge(g, root, a, b)
    if oriented is None:
        return 0
    return len(forced_under_edge(g, root, *oriented))


def strategy_residual_II(
    g: OwnedGraph, u: int, v: int, w: int, e: tuple[int, int], alpha: Fraction
) -> ResidualReport:
    """v swaps both vw and a second owned edge e for vu.

    boundValue adds (k_max - 2) * |T_u(e)| - alpha to the Strategy I bound.
    Also reports the simplified bound that replaces |T_u(e)| by |T_u(v)|.
    The sale of e relies on a detour around e's min-cycle, so that cycle must
    be directed and must not contain vw.
    """
    a, b = min(e), max(e)
    for x in (u, v, w, a, b):
        g.check_vertex(x)
    _require_owned(g, v, w, "swapped")
    if v not in (a, b):
        raise PreconditionFailedError(f"{v} is not an endpoint of {e}")
    _require_owned(g, v, a if v == b else b, "second sold")
    if (a, b) == (min(v, w), max(v, w)):
        raise PreconditionFailedError("second sold edge coincides with vw")
    uv_absent = _check_swap_target(g, u, v)
    if u == w:
        raise PreconditionFailedError("swap target equals the sold edge's endpoint")
    comp = _cyclic_component_with(g, u, v)
    for key, label in (((min(v, w), max(v, w)), "vw"), ((a, b), "e")):
        if key not in comp.edges:
            raise PreconditionFailedError(f"sold edge {label} lies outside the component")
    # the sale of e is paid for by a detour around a shortest cycle through
    # e; that detour must survive the simultaneous sale of vw.  In the
    # paper's setting this follows from e's min-cycle being directed (and
    # hence avoiding vw); here the detour condition is checked directly so
    # the bound stays sound on arbitrary inputs.
    cyc = smallest_cycle_through(g, (a, b))
    assert comp.k_max is not None
    detour = _detour_distance(g, (a, b), (min(v, w), max(v, w)))
    if detour > comp.k_max - 1:
        raise PreconditionFailedError(
            "no cycle of length <= k_max through e avoids the sold edge vw"
        )
    forced_v = forced_under_vertex(g, u, v)
    if w in forced_v:
        raise PreconditionFailedError(
            f"vertex {w} is forced below {v} in every SPT rooted at {u}"
        )
    du, dv = connection_cost(g, u), connection_cost(g, v)
    if du == INF or dv == INF:
        raise PreconditionFailedError("graph is disconnected")
    t_v = len(forced_v)
    t_e = _edge_subtree_min(g, u, a, b)
    d_uv = int(g.dist(u, v))
    base = int(du) + (g.n - 1) - int(dv)
    bound = Fraction(base - (d_uv + 1) * t_v + (comp.k_max - 2) * t_e) - alpha
    simplified = Fraction(base + (comp.k_max - d_uv - 3) * t_v) - alpha
    z = a if v == b else b
    new_owned = (g.owned_targets(v) - {w, z}) | {u}
    delta = deviation_delta(g, v, new_owned)
    if delta.delta_dist in (INF, -INF):
        raise PreconditionFailedError("literal strategy change disconnects the graph")
    exact = delta.delta_build * alpha + Fraction(int(delta.delta_dist))
    details = {
        "subtree_v": t_v,
        "subtree_e": t_e,
        "k_max": comp.k_max,
        "d_uv": d_uv,
        "min_cycle_directed": bool(cyc is not None and cyc.is_directed),
    }
    if not uv_absent:
        details["unmet"] = "edge uv already present"
    return ResidualReport(
        strategy_kind="II",
        bound_value=bound,
        exact_delta=exact,
        preconditions_met=uv_absent,
        simplified_bound=simplified,
        details=details,
    )


def _detour_distance(
    g: OwnedGraph, e: tuple[int, int], avoid: tuple[int, int]
) -> float:
    """Distance between e's endpoints with both e and `avoid` removed."""
    from .graph import bfs_distances

    adj = [list(a) for a in g.adjacency]
    for x, y in (e, avoid):
        if y in adj[x]:
            adj[x].remove(y)
            adj[y].remove(x)
    return bfs_distances(adj, e[0])[e[1]]


def strategy_residual_III(
    g: OwnedGraph, u: int, v: int, alpha: Fraction
) -> ResidualReport:
    """v swaps all ell edges it owns for the single edge vu.

    boundValue = D(u) + (n-1) - D(v) + 2 d(v,w) * |T_u(v)| - (ell-1) * alpha
    where w is the component vertex that can sit deepest below v in an SPT
    rooted at u.  All of v's edges must lie inside the shared component, and
    the subtrees hanging below distinct sold edges must have no edge between
    them (at an equilibrium with alpha > 2(n-1) that is automatic; here it is
    checked directly so the bound stays sound on arbitrary inputs).
    """
    for x in (u, v):
        g.check_vertex(x)
    uv_absent = _check_swap_target(g, u, v)
    owned = g.owned_by(v)
    if not owned:
        raise PreconditionFailedError(f"vertex {v} owns no edges")
    comp = _cyclic_component_with(g, u, v)
    for edge in owned:
        if edge.key() not in comp.edges:
            raise PreconditionFailedError(
                f"owned edge {edge.key()} lies outside the component"
            )
    du, dv = connection_cost(g, u), connection_cost(g, v)
    if du == INF or dv == INF:
        raise PreconditionFailedError("graph is disconnected")
    # cross edges between the subtrees sold away would let distance increases
    # cascade; rule them out over all possible subtree members
    sold_targets = sorted(
        edge.other(v) for edge in owned if edge.other(v) != u
    )
    members: dict[int, set[int]] = {}
    for x in sold_targets:
        oriented = orient_edge(g, u, v, x)
        members[x] = possible_under_edge(g, u, *oriented) if oriented else set()
    for i, x in enumerate(sold_targets):
        for y in sold_targets[i + 1:]:
            for s in members[x]:
                for t in members[y]:
                    if s != t and g.has_edge(s, t):
                        raise PreconditionFailedError(
                            f"edge {{{s},{t}}} joins subtrees below {x} and {y}"
                        )
    forced_v = forced_under_vertex(g, u, v)
    possible_v = possible_under_vertex(g, u, v) | forced_v
    in_h = [x for x in possible_v if x in comp.vertices]
    w = max(in_h, key=lambda x: (g.dist(u, x), x))
    d_vw = int(g.dist(u, w)) - int(g.dist(u, v))
    ell = len(owned)
    bound = (
        Fraction(int(du) + (g.n - 1) - int(dv) + 2 * d_vw * len(forced_v))
        - (ell - 1) * alpha
    )
    exact = Fraction(_exact_dist_delta(g, v, frozenset({u}))) - (ell - 1) * alpha
    details = {
        "ell": ell,
        "w": w,
        "d_vw": d_vw,
        "subtree_v": len(forced_v),
    }
    if not uv_absent:
        details["unmet"] = "edge uv already present"
    return ResidualReport(
        strategy_kind="III",
        bound_value=bound,
        exact_delta=exact,
        preconditions_met=uv_absent,
        details=details,
    )
