"""CLI behaviour: subcommands, exit codes, emitted files, and the remote
transport against a live ASGI app."""

import json

import pytest
from click.testing import CliRunner

from chaingeom.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_points_count(runner):
    res = runner.invoke(main, ["points", "--ring", "m2:gf(2)", "--count-only"])
    assert res.exit_code == 0
    assert "35" in res.output


def test_points_emit(runner, tmp_path):
    out = tmp_path / "points.json"
    res = runner.invoke(main, ["points", "--ring", "dual:gf(2)",
                               "--emit", str(out)])
    assert res.exit_code == 0
    payload = json.loads(out.read_text())
    assert payload["count"] == 6
    assert len(payload["points"]) == 6


def test_chains_command(runner):
    res = runner.invoke(main, ["chains", "--ring", "m2:gf(2)", "--field",
                               "gf(4)", "--embed", "regular", "--count-only"])
    assert res.exit_code == 0
    assert "56" in res.output


def test_analyze_writes_certificate(runner, tmp_path):
    out = tmp_path / "cert.json"
    res = runner.invoke(main, ["analyze", "--ring", "m2:gf(2)", "--field",
                               "gf(2)", "--embed", "scalar", "--rep", "natural",
                               "--spread-limit", "2", "--emit", str(out)])
    assert res.exit_code == 0, res.output
    cert = json.loads(out.read_text())
    assert cert["schema_version"] == "chaingeom-cert/1"
    assert cert["verdict"]["verdict"] == "regulus"
    assert "verdict: regulus" in res.output


def test_analyze_invalid_descriptor_exit_2(runner):
    res = runner.invoke(main, ["analyze", "--ring", "nope:gf(2)", "--field",
                               "gf(2)"])
    assert res.exit_code == 2


def test_analyze_cap_exceeded_exit_3(runner):
    res = runner.invoke(main, ["analyze", "--ring", "m2:gf(5)", "--field",
                               "gf(25)", "--embed", "regular"])
    assert res.exit_code == 3


def test_morphism_condition_exit_4(runner):
    res = runner.invoke(main, [
        "morphism", "--source-ring", "m2:gf(2)", "--source-field", "gf(4)",
        "--source-embed", "regular", "--target-ring", "m2:gf(2)",
        "--target-field", "gf(2)", "--target-embed", "scalar",
        "--h1", "1,0;0,1"])
    assert res.exit_code == 4


def test_morphism_identity_table(runner):
    res = runner.invoke(main, [
        "morphism", "--source-ring", "m2:gf(2)", "--source-field", "gf(4)",
        "--source-embed", "regular", "--target-ring", "m2:gf(2)",
        "--target-field", "gf(4)", "--target-embed", "regular",
        "--h1", "1,0;0,1"])
    assert res.exit_code == 0, res.output
    assert "bijective" in res.output and "True" in res.output
    assert "False" not in res.output


def test_morphism_negative_control(runner, tmp_path):
    out = tmp_path / "neg.json"
    res = runner.invoke(main, [
        "morphism", "--source-ring", "m2:gf(2)", "--source-field", "gf(4)",
        "--source-embed", "regular", "--target-ring", "m2:gf(2)",
        "--target-field", "gf(2)", "--target-embed", "scalar",
        "--h1", "1,0;0,1", "--force", "--emit", str(out)])
    assert res.exit_code == 0
    cert = json.loads(out.read_text())
    assert cert["forced"] is True
    assert cert["verdicts"]["chains_into_chains"] is False


def test_morphism_bad_h1_exit_2(runner):
    res = runner.invoke(main, [
        "morphism", "--source-ring", "m2:gf(2)", "--source-field", "gf(4)",
        "--target-ring", "m2:gf(2)", "--target-field", "gf(4)",
        "--h1", "banana"])
    assert res.exit_code == 2


def test_verify_suite_only_filter(runner, tmp_path):
    out = tmp_path / "suite.json"
    res = runner.invoke(main, ["verify-suite", "--seed", "7", "--only",
                               "point-counts", "--emit", str(out)])
    assert res.exit_code == 0, res.output
    cert = json.loads(out.read_text())
    assert cert["passed"] is True
    assert [c["id"] for c in cert["checks"]] == ["point-counts"]
    assert "overall: pass" in res.output


def test_verify_suite_filtered_deterministic(runner, tmp_path):
    f1, f2 = tmp_path / "a.json", tmp_path / "b.json"
    for f in (f1, f2):
        res = runner.invoke(main, ["verify-suite", "--seed", "7", "--only",
                                   "transversal", "--emit", str(f)])
        assert res.exit_code == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_emit_dot(runner, tmp_path):
    dot = tmp_path / "graph.dot"
    res = runner.invoke(main, ["points", "--ring", "gf(2)", "--count-only",
                               "--emit-dot", str(dot)])
    assert res.exit_code == 0
    text = dot.read_text()
    assert text.startswith("graph")
    assert "--" in text


def test_remote_transport(tmp_path):
    """--server path goes over HTTP; exercised against a live server."""
    import threading
    import time

    import httpx
    import uvicorn

    from chaingeom.service import app

    config = uvicorn.Config(app, host="127.0.0.1", port=8731, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    for _ in range(100):
        try:
            httpx.get("http://127.0.0.1:8731/", timeout=1.0)
            break
        except Exception:
            time.sleep(0.05)
    try:
        runner = CliRunner()
        res = runner.invoke(main, ["--server", "http://127.0.0.1:8731",
                                   "points", "--ring", "dual:gf(2)",
                                   "--count-only"])
        assert res.exit_code == 0, res.output
        assert "6" in res.output
    finally:
        server.should_exit = True
        thread.join(timeout=5)
