import json
import os
import subprocess

import pytest

CLI = os.environ.get("CDS_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="CDS_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)


def test_analyze_json():
    r = run("--json", "analyze", "[8 1 5 2 4 3 7 6]")
    assert r.returncode == 0
    out = json.loads(r.stdout)
    assert out["strategic_pile"]["trace"] == [6, 3, 2, 4, 1, 5, 7]


def test_apply_text():
    r = run("apply", "[6 3 5 1 2 4]", "3", "5")
    assert r.returncode == 0 and r.stdout.strip() == "[1 2 5 6 3 4]"


def test_census_json():
    r = run("--json", "census", "3")
    assert r.returncode == 0
    assert json.loads(r.stdout)["total"] == 40


def test_verify_passes():
    r = run("verify", "examples")
    assert r.returncode == 0


def test_game_solve():
    r = run("--json", "game", "solve", "[2 4 6 1 3 5]", "--targets", "1,2,3")
    assert r.returncode == 0


def test_usage_errors():
    assert run("analyze").returncode == 2
    assert run("analyze", "[1 1 2]").returncode == 2
    assert run("--max-n", "3", "census", "4").returncode == 2
    assert run("game", "solve", "[2 4 6 8 10 12 14 16 18 20 1 3 5 7 9 11 13 15 17 19]").returncode == 2
    assert run("bogus").returncode == 2
