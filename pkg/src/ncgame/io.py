"""Profile files, census emission and DOT export.

Profile JSON: {"n": int, "alpha": "p/q" | int | null, "edges": [{"u", "v",
"owner"}]}.  Parsing is strict: unknown fields are rejected so typos in
experiment scripts fail loudly.  Rationals are serialized as "p/q" strings,
never floats.
"""

from __future__ import annotations

import csv
import io as _io
import json
from fractions import Fraction
from pathlib import Path

from .census import CensusRecord
from .errors import NcgameError, ParseError
from .graph import INF, OwnedGraph, build_graph

_PROFILE_FIELDS = {"n", "alpha", "edges"}
_EDGE_FIELDS = {"u", "v", "owner"}


def parse_alpha(raw: object) -> Fraction:
    """Accept "p/q" strings, integer strings and plain ints; must be > 0."""
    try:
        if isinstance(raw, bool):
            raise ValueError
        if isinstance(raw, int):
            alpha = Fraction(raw)
        elif isinstance(raw, str):
            alpha = Fraction(raw.strip())
        else:
            raise ValueError
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"alpha must be a positive rational 'p/q', got {raw!r}")
    if alpha <= 0:
        raise ParseError(f"alpha must be positive, got {alpha}")
    return alpha


def format_alpha(alpha: Fraction) -> str:
    return f"{alpha.numerator}/{alpha.denominator}"


def profile_from_json(data: object) -> tuple[OwnedGraph, Fraction | None]:
    if not isinstance(data, dict):
        raise ParseError("profile must be a JSON object")
    unknown = set(data) - _PROFILE_FIELDS
    if unknown:
        raise ParseError(f"unknown profile fields: {sorted(unknown)}")
    if "n" not in data or "edges" not in data:
        raise ParseError("profile requires fields 'n' and 'edges'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"field 'n' must be a positive integer, got {n!r}")
    edges_raw = data["edges"]
    if not isinstance(edges_raw, list):
        raise ParseError("field 'edges' must be a list")
    edges = []
    for i, entry in enumerate(edges_raw):
        if not isinstance(entry, dict):
            raise ParseError(f"edges[{i}] must be an object")
        unknown = set(entry) - _EDGE_FIELDS
        if unknown:
            raise ParseError(f"edges[{i}]: unknown fields {sorted(unknown)}")
        try:
            u, v, owner = entry["u"], entry["v"], entry["owner"]
        except KeyError as exc:
            raise ParseError(f"edges[{i}]: missing field {exc.args[0]!r}")
        for name, val in (("u", u), ("v", v), ("owner", owner)):
            if not isinstance(val, int) or isinstance(val, bool):
                raise ParseError(f"edges[{i}].{name} must be an integer")
        edges.append((u, v, owner))
    try:
        g = build_graph(n, edges)
    except NcgameError as exc:
        raise ParseError(f"invalid profile: {exc}") from exc
    alpha = None
    if data.get("alpha") is not None:
        alpha = parse_alpha(data["alpha"])
    return g, alpha


def profile_to_json(g: OwnedGraph, alpha: Fraction | None = None) -> dict:
    out: dict = {
        "n": g.n,
        "edges": [{"u": e.u, "v": e.v, "owner": e.owner} for e in g.edges],
    }
    if alpha is not None:
        out["alpha"] = format_alpha(alpha)
    return out


def load_profile(path: str | Path) -> tuple[OwnedGraph, Fraction | None]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}")
    return profile_from_json(data)


def save_profile(
    g: OwnedGraph, path: str | Path, alpha: Fraction | None = None
) -> None:
    Path(path).write_text(
        json.dumps(profile_to_json(g, alpha), indent=2) + "\n"
    )


# ---------------------------------------------------------------------------
# Census emission

CENSUS_CSV_COLUMNS = [
    "canonicalId", "n", "intervalLo", "loClosed", "intervalHi", "hiClosed",
    "isTree", "girth",
]


def census_to_csv(records: list[CensusRecord]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_CSV_COLUMNS)
    for r in records:
        iv = r.nash_interval
        writer.writerow([
            r.canonical_id,
            r.n,
            format_alpha(iv.lower),
            str(iv.lower_closed).lower(),
            "inf" if iv.upper is None else format_alpha(iv.upper),
            str(iv.upper_closed).lower(),
            str(r.is_tree).lower(),
            "inf" if r.girth == INF else int(r.girth),
        ])
    return buf.getvalue()


def census_to_json(records: list[CensusRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2) + "\n"


# ---------------------------------------------------------------------------
# DOT export


def export_dot(g: OwnedGraph) -> str:
    """One directed arc per edge; the arc tail is the owner."""
    lines = ["digraph profile {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for e in g.edges:
        head = e.other(e.owner)
        lines.append(f"  {e.owner} -> {head};")
    lines.append("}")
    return "\n".join(lines) + "\n"
