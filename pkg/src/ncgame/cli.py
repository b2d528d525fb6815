"""Command-line interface.

Exit codes: 0 success, 1 negative verdict (non-equilibrium / counterexample
found — distinguishable from success for scripting), 2 input error, 3 budget
exceeded.  Alpha values are rationals written as "p/q" or plain integers.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from .census import EnumMode, Policy, Schedule, Status, census as run_census
from .census import dynamics as run_dynamics
from .census import hunt_nontree
from .engine import is_nash, nash_alpha_interval
from .errors import BudgetExceededError, NcgameError, ParseError
from .io import (
    census_to_csv,
    census_to_json,
    export_dot,
    format_alpha,
    load_profile,
    parse_alpha,
)
from .lemmas import run_all, summarize

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class AlphaParam(click.ParamType):
    name = "alpha"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_alpha(value)
        except ParseError as exc:
            self.fail(str(exc), param, ctx)


ALPHA = AlphaParam()


def _load(path: str):
    try:
        return load_profile(path)
    except ParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _resolve_alpha(flag: Fraction | None, embedded: Fraction | None) -> Fraction:
    if flag is not None:
        return flag
    if embedded is not None:
        return embedded
    click.echo("error: no alpha given (flag --alpha or profile field)", err=True)
    sys.exit(EXIT_INPUT)


@click.group()
def main() -> None:
    """Exact workbench for the network creation game."""


@main.command()
@click.argument("profile", type=click.Path())
@click.option("--alpha", type=ALPHA, default=None, help="edge price p/q")
def verify(profile: str, alpha: Fraction | None) -> None:
    """Nash verdict for a profile at one alpha."""
    g, embedded = _load(profile)
    a = _resolve_alpha(alpha, embedded)
    try:
        verdict = is_nash(g, a)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    out: dict = {"isEquilibrium": verdict.is_equilibrium, "alpha": format_alpha(a)}
    if verdict.witness is not None:
        v, s, delta = verdict.witness
        out["witness"] = {
            "vertex": v,
            "newOwned": sorted(s),
            "deltaBuild": delta.delta_build,
            "deltaDist": None if abs(delta.delta_dist) == float("inf")
            else int(delta.delta_dist),
        }
    click.echo(json.dumps(out, indent=2))
    sys.exit(EXIT_OK if verdict.is_equilibrium else EXIT_NEGATIVE)


@main.command()
@click.argument("profile", type=click.Path())
def interval(profile: str) -> None:
    """Exact alpha-interval over which the profile is an equilibrium."""
    g, _ = _load(profile)
    try:
        iv = nash_alpha_interval(g)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    click.echo(json.dumps(iv.to_json(), indent=2))
    sys.exit(EXIT_OK if not iv.empty else EXIT_NEGATIVE)


@main.command()
@click.argument("profile", type=click.Path())
@click.option("--alpha", type=ALPHA, default=None, help="edge price p/q")
def lemmas(profile: str, alpha: Fraction | None) -> None:
    """Run the structural lemma suite at one alpha."""
    g, embedded = _load(profile)
    a = _resolve_alpha(alpha, embedded)
    try:
        reports = run_all(g, a)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    out = {
        "alpha": format_alpha(a),
        "summary": summarize(reports),
        "reports": [r.to_json() for r in reports],
    }
    click.echo(json.dumps(out, indent=2))
    sys.exit(EXIT_OK if out["summary"]["FAIL"] == 0 else EXIT_NEGATIVE)


@main.command(name="census")
@click.option("-n", "n", type=int, required=True)
@click.option("--canonical", is_flag=True, help="enumerate one profile per class")
@click.option("--out", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--workers", type=int, default=1)
@click.option("--checkpoint-dir", type=click.Path(), default=None)
def census_cmd(n: int, canonical: bool, fmt: str, workers: int,
               checkpoint_dir: str | None) -> None:
    """Equilibrium census over all alpha simultaneously."""
    mode = EnumMode.CANONICAL if canonical else EnumMode.LABELED
    try:
        records = run_census(n, mode=mode, workers=workers,
                             checkpoint_dir=checkpoint_dir, with_lemmas=False)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except NcgameError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    click.echo(census_to_csv(records) if fmt == "csv"
               else census_to_json(records), nl=False)
    sys.exit(EXIT_OK)


@main.command()
@click.option("-n", "n", type=int, required=True)
@click.option("--alpha-lo", type=ALPHA, required=True)
@click.option("--alpha-hi", type=ALPHA, default=None)
@click.option("--workers", type=int, default=1)
def hunt(n: int, alpha_lo: Fraction, alpha_hi: Fraction | None,
         workers: int) -> None:
    """Hunt non-tree equilibria whose interval meets [alpha-lo, alpha-hi]."""
    try:
        found = hunt_nontree(n, alpha_lo, alpha_hi, workers=workers)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    click.echo(census_to_json(found), nl=False)
    sys.exit(EXIT_NEGATIVE if found else EXIT_OK)


@main.command(name="dynamics")
@click.argument("profile", type=click.Path())
@click.option("--alpha", type=ALPHA, default=None, help="edge price p/q")
@click.option("--policy",
              type=click.Choice([p.value for p in Policy]),
              default=Policy.BEST_RESPONSE.value)
@click.option("--schedule",
              type=click.Choice([s.value for s in Schedule]),
              default=Schedule.ROUND_ROBIN.value)
@click.option("--seed", type=int, default=0)
@click.option("--max-rounds", type=int, default=100)
def dynamics_cmd(profile: str, alpha: Fraction | None, policy: str,
                 schedule: str, seed: int, max_rounds: int) -> None:
    """Iterated strict-improvement play from a profile."""
    g, embedded = _load(profile)
    a = _resolve_alpha(alpha, embedded)
    try:
        traj = run_dynamics(g, a, Policy(policy), Schedule(schedule),
                            seed=seed, max_rounds=max_rounds)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    out = {
        "status": traj.status.value,
        "steps": [
            {
                "mover": s.mover,
                "newOwned": sorted(s.deviation),
                "deltaBuild": s.delta.delta_build,
                "deltaDist": None if abs(s.delta.delta_dist) == float("inf")
                else int(s.delta.delta_dist),
                "profile": s.profile_code,
            }
            for s in traj.steps
        ],
    }
    click.echo(json.dumps(out, indent=2))
    sys.exit(EXIT_OK if traj.status is Status.CONVERGED else EXIT_NEGATIVE)


@main.command(name="export-dot")
@click.argument("profile", type=click.Path())
def export_dot_cmd(profile: str) -> None:
    """Emit the profile as a DOT digraph (arc tail = owner)."""
    g, _ = _load(profile)
    click.echo(export_dot(g), nl=False)
    sys.exit(EXIT_OK)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the HTTP API (requires uvicorn)."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
