import json
from fractions import Fraction as F

import pytest
from click.testing import CliRunner

from ncgame import fixtures as fx
from ncgame.cli import main
from ncgame.errors import ParseError
from ncgame.io import (
    census_to_csv,
    export_dot,
    load_profile,
    parse_alpha,
    profile_from_json,
    save_profile,
)


def test_profile_roundtrip(tmp_path):
    for g in (fx.star4(), fx.cyc5(), fx.k4lex(), fx.cyc5_pendant()):
        p = tmp_path / "g.json"
        save_profile(g, p, F(3, 2))
        g2, alpha = load_profile(p)
        assert g2 == g and alpha == F(3, 2)


def test_alpha_normalized_on_save(tmp_path):
    p = tmp_path / "g.json"
    save_profile(fx.path3(), p, parse_alpha("4/2"))
    assert json.loads(p.read_text())["alpha"] == "2/1"


def test_self_loop_rejected():
    with pytest.raises(ParseError):
        profile_from_json({"n": 2, "edges": [{"u": 0, "v": 0, "owner": 0}]})


def test_unknown_field_rejected():
    with pytest.raises(ParseError, match="unknown"):
        profile_from_json({"n": 2, "edges": [], "extra": 1})
    with pytest.raises(ParseError, match="unknown"):
        profile_from_json(
            {"n": 2, "edges": [{"u": 0, "v": 1, "owner": 0, "weight": 2}]})


def test_nonpositive_alpha_rejected():
    with pytest.raises(ParseError):
        parse_alpha("0")
    with pytest.raises(ParseError):
        parse_alpha("-3/2")


def test_export_dot_one_arc_per_edge():
    dot = export_dot(fx.cyc5_pendant())
    arcs = [line for line in dot.splitlines() if "->" in line]
    assert len(arcs) == 6
    assert "  5 -> 0;" in arcs  # pendant buyer is the tail


def test_census_csv_headers():
    assert census_to_csv([]).splitlines()[0] == (
        "canonicalId,n,intervalLo,loClosed,intervalHi,hiClosed,isTree,girth")


# ---------------------------------------------------------------------------
# CLI


@pytest.fixture
def cyc5_file(tmp_path):
    p = tmp_path / "cyc5.json"
    save_profile(fx.cyc5(), p)
    return str(p)


def test_cli_verify_equilibrium(cyc5_file):
    result = CliRunner().invoke(main, ["verify", cyc5_file, "--alpha", "2"])
    assert result.exit_code == 0
    assert json.loads(result.output)["isEquilibrium"] is True


def test_cli_verify_negative_verdict(cyc5_file):
    result = CliRunner().invoke(main, ["verify", cyc5_file, "--alpha", "5"])
    assert result.exit_code == 1
    data = json.loads(result.output)
    assert data["witness"]["vertex"] == 0
    assert data["witness"]["newOwned"] == []


def test_cli_interval(cyc5_file):
    result = CliRunner().invoke(main, ["interval", cyc5_file])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert (data["lower"], data["upper"]) == ("1", "4")


def test_cli_malformed_input(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    result = CliRunner().invoke(main, ["verify", str(p), "--alpha", "2"])
    assert result.exit_code == 2


def test_cli_missing_alpha_is_input_error(cyc5_file):
    result = CliRunner().invoke(main, ["verify", cyc5_file])
    assert result.exit_code == 2


def test_cli_lemmas(cyc5_file):
    result = CliRunner().invoke(main, ["lemmas", cyc5_file, "--alpha", "2"])
    assert result.exit_code == 0
    assert json.loads(result.output)["summary"]["FAIL"] == 0


def test_cli_census_csv():
    result = CliRunner().invoke(main, ["census", "-n", "3"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].startswith("canonicalId")
    assert len(lines) == 6  # header + 3 trees + 2 triangles


def test_cli_census_budget():
    result = CliRunner().invoke(main, ["census", "-n", "9"])
    assert result.exit_code == 3


def test_cli_hunt_exit_codes():
    found = CliRunner().invoke(
        main, ["hunt", "-n", "3", "--alpha-lo", "1", "--alpha-hi", "1"])
    assert found.exit_code == 1
    clean = CliRunner().invoke(
        main, ["hunt", "-n", "4", "--alpha-lo", "10", "--alpha-hi", "11"])
    assert clean.exit_code == 0


def test_cli_dynamics(cyc5_file):
    result = CliRunner().invoke(
        main, ["dynamics", cyc5_file, "--alpha", "5"])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["status"] == "CONVERGED"
    assert data["steps"][0]["mover"] == 0


def test_cli_export_dot(cyc5_file):
    result = CliRunner().invoke(main, ["export-dot", cyc5_file])
    assert result.exit_code == 0
    assert result.output.count("->") == 5
