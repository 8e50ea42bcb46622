"""Service endpoints: request/response round trips, error mapping, and
schema stability of the certificates."""

import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from chaingeom.schemas import SCHEMA_VERSION, canonical_json_bytes
from chaingeom.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_info(client):
    resp = client.get("/")
    assert resp.status_code == 200
    body = resp.json()
    assert body["service"] == "chaingeom"
    assert "/analyze" in body["endpoints"]


def test_list_checks(client):
    resp = client.get("/checks")
    assert resp.status_code == 200
    ids = resp.json()["checks"]
    assert "centralizing-basis" in ids
    assert len(ids) == len(set(ids))


def test_analyze_endpoint(client):
    resp = client.post("/analyze", json={
        "ring": "m2:gf(2)", "field": "gf(4)", "embed": "regular",
        "rep": "natural", "spread_limit": 4})
    assert resp.status_code == 200
    cert = resp.json()
    assert cert["schema_version"] == SCHEMA_VERSION
    assert cert["counts"]["points"] == 35
    assert cert["counts"]["chains"] == 56
    assert cert["counts"]["chain_size"] == 5
    assert cert["verdict"]["verdict"] == "neither"
    assert cert["spread_summary"]["regular_spread"] == 4
    assert cert["spread_summary"]["skipped"] == 52
    assert cert["transversals"] == []
    assert cert["timings"] is None


def test_analyze_regulus_with_transversals(client):
    resp = client.post("/analyze", json={
        "ring": "dual:gf(2)", "field": "gf(2)", "embed": "scalar",
        "rep": "regular"})
    cert = resp.json()
    assert cert["verdict"]["verdict"] == "regulus"
    assert cert["verdict"]["automorphism"] == "frob^0"
    assert cert["verdict"]["synthetic_checked"] is True
    vectors = {tuple(t["vector"]) for t in cert["transversals"]}
    assert (0, 1) in vectors  # the eps line
    assert all(t["full"] for t in cert["transversals"])


def test_analyze_quasi_regulus(client):
    resp = client.post("/analyze", json={
        "ring": "gf(4)", "field": "gf(4)", "embed": "scalar",
        "rep": "basis:frob^0", "dim": 2})
    cert = resp.json()
    assert cert["verdict"]["verdict"] == "regulus"
    assert len(cert["transversals"]) == 5


def test_invalid_descriptor_maps_to_422(client):
    resp = client.post("/analyze", json={"ring": "m7x:gf(2)", "field": "gf(2)"})
    assert resp.status_code == 422
    assert resp.json()["error"] == "invalid-descriptor"
    resp = client.post("/points", json={"ring": "gf(6)"})
    assert resp.status_code == 422


def test_cap_exceeded_maps_to_400(client):
    resp = client.post("/analyze", json={"ring": "m2:gf(5)", "field": "gf(25)",
                                         "embed": "regular"})
    assert resp.status_code == 400
    assert resp.json()["error"] == "cap-exceeded"


def test_morphism_endpoint(client):
    resp = client.post("/morphism", json={
        "source": {"ring": "m2:gf(2)", "field": "gf(4)", "embed": "regular"},
        "target": {"ring": "m2:gf(2)", "field": "gf(4)", "embed": "regular"},
        "kappa": "frob^0", "h1": [[1, 0], [0, 1]]})
    assert resp.status_code == 200
    cert = resp.json()
    assert cert["kind"] == "morphism"
    assert all(cert["verdicts"].values())
    assert cert["descriptor"] == {"kappa": "frob^0", "H1": [[1, 0], [0, 1]],
                                  "omega": None}


def test_morphism_condition_maps_to_400(client):
    resp = client.post("/morphism", json={
        "source": {"ring": "m2:gf(2)", "field": "gf(4)", "embed": "regular"},
        "target": {"ring": "m2:gf(2)", "field": "gf(2)", "embed": "scalar"},
        "kappa": "frob^0", "h1": [[1, 0], [0, 1]]})
    assert resp.status_code == 400
    assert resp.json()["error"] == "morphism-condition"


def test_points_endpoint(client):
    resp = client.post("/points", json={"ring": "dual:gf(2)"})
    body = resp.json()
    assert body["count"] == 6
    assert len(body["points"]) == 6
    assert body["points"][0]["id"] == 0
    resp2 = client.post("/points", json={"ring": "dual:gf(2)",
                                         "include_elements": False})
    assert resp2.json()["points"] is None


def test_chains_endpoint(client):
    resp = client.post("/chains", json={"ring": "m2:gf(2)", "field": "gf(4)",
                                        "embed": "regular",
                                        "include_elements": False})
    body = resp.json()
    assert body["count"] == 56
    assert body["chain_size"] == 5
    assert body["complete"] is True
    resp2 = client.post("/chains", json={"ring": "gf(2)", "field": "gf(2)"})
    body2 = resp2.json()
    assert body2["count"] == 1
    assert len(body2["chains"][0]["points"]) == 3


def test_verify_suite_endpoint_filtered(client):
    resp = client.post("/verify-suite", json={"seed": 7, "only": "point-counts"})
    cert = resp.json()
    assert cert["passed"] is True
    assert len(cert["checks"]) == 1
    assert cert["checks"][0]["status"] == "pass"
    assert cert["timings"] is None


def test_certificate_bytes_deterministic(client):
    req = {"ring": "m2:gf(2)", "field": "gf(4)", "embed": "regular",
           "rep": "natural", "spread_limit": 2, "seed": 7}
    a = client.post("/analyze", json=req).json()
    b = client.post("/analyze", json=req).json()
    assert canonical_json_bytes(a) == canonical_json_bytes(b)
