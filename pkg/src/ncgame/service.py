"""HTTP API exposing the verification core.

Thin wrapper: requests carry the same profile shape as the JSON file format,
responses mirror the CLI's JSON output.  Rationals travel as "p/q" strings.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from .census import Policy, Schedule
from .census import dynamics as run_dynamics
from .census import hunt_nontree
from .engine import is_nash, nash_alpha_interval
from .errors import BudgetExceededError, NcgameError, ParseError
from .io import format_alpha, parse_alpha, profile_from_json
from .lemmas import run_all, summarize

app = FastAPI(title="ncgame", version="0.1.0")


class EdgeModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    u: int
    v: int
    owner: int


class ProfileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    n: int
    alpha: str | int | None = None
    edges: list[EdgeModel]


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    profile: ProfileModel
    alpha: str | int | None = None


class DynamicsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    profile: ProfileModel
    alpha: str | int | None = None
    policy: str = Policy.BEST_RESPONSE.value
    schedule: str = Schedule.ROUND_ROBIN.value
    seed: int = 0
    max_rounds: int = Field(default=100, ge=1)


class HuntRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    n: int
    alpha_lo: str | int
    alpha_hi: str | int | None = None


def _decode(profile: ProfileModel, alpha: str | int | None):
    try:
        g, embedded = profile_from_json(profile.model_dump(exclude_none=True))
        a = parse_alpha(alpha) if alpha is not None else embedded
    except (ParseError, NcgameError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return g, a


def _require_alpha(a: Fraction | None) -> Fraction:
    if a is None:
        raise HTTPException(status_code=422, detail="no alpha given")
    return a


@app.post("/verify")
def verify(req: VerifyRequest) -> dict:
    g, a = _decode(req.profile, req.alpha)
    a = _require_alpha(a)
    try:
        verdict = is_nash(g, a)
    except BudgetExceededError as exc:
        raise HTTPException(status_code=429, detail=str(exc))
    out: dict = {"isEquilibrium": verdict.is_equilibrium, "alpha": format_alpha(a)}
    if verdict.witness is not None:
        v, s, delta = verdict.witness
        out["witness"] = {"vertex": v, "newOwned": sorted(s),
                          "deltaBuild": delta.delta_build}
    return out


@app.post("/interval")
def interval(req: VerifyRequest) -> dict:
    g, _ = _decode(req.profile, req.alpha)
    try:
        return nash_alpha_interval(g).to_json()
    except BudgetExceededError as exc:
        raise HTTPException(status_code=429, detail=str(exc))


@app.post("/lemmas")
def lemmas(req: VerifyRequest) -> dict:
    g, a = _decode(req.profile, req.alpha)
    a = _require_alpha(a)
    try:
        reports = run_all(g, a)
    except BudgetExceededError as exc:
        raise HTTPException(status_code=429, detail=str(exc))
    return {
        "alpha": format_alpha(a),
        "summary": summarize(reports),
        "reports": [r.to_json() for r in reports],
    }


@app.post("/hunt")
def hunt(req: HuntRequest) -> dict:
    try:
        lo = parse_alpha(req.alpha_lo)
        hi = parse_alpha(req.alpha_hi) if req.alpha_hi is not None else None
        found = hunt_nontree(req.n, lo, hi)
    except ParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    except BudgetExceededError as exc:
        raise HTTPException(status_code=429, detail=str(exc))
    return {"found": [r.to_json() for r in found]}


@app.post("/dynamics")
def dynamics(req: DynamicsRequest) -> dict:
    g, a = _decode(req.profile, req.alpha)
    a = _require_alpha(a)
    try:
        policy = Policy(req.policy)
        schedule = Schedule(req.schedule)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    try:
        traj = run_dynamics(g, a, policy, schedule, seed=req.seed,
                            max_rounds=req.max_rounds)
    except BudgetExceededError as exc:
        raise HTTPException(status_code=429, detail=str(exc))
    return {
        "status": traj.status.value,
        "steps": [
            {"mover": s.mover, "newOwned": sorted(s.deviation),
             "profile": s.profile_code}
            for s in traj.steps
        ],
    }
