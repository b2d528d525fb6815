"""Exact computational workbench for the network creation game."""

from .engine import AlphaInterval, NashVerdict, best_response, is_nash, nash_alpha_interval
from .game import DeviationDelta, apply_deviation, deviation_delta, social_cost, vertex_cost
from .graph import Edge, OwnedGraph, build_graph, connection_cost, girth

__all__ = [
    "AlphaInterval",
    "DeviationDelta",
    "Edge",
    "NashVerdict",
    "OwnedGraph",
    "apply_deviation",
    "best_response",
    "build_graph",
    "connection_cost",
    "deviation_delta",
    "girth",
    "is_nash",
    "nash_alpha_interval",
    "social_cost",
    "vertex_cost",
]

__version__ = "0.1.0"
