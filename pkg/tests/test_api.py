# tests/test_api.py
from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from main import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_healthz(client):
    assert client.get("/healthz").json() == {"ok": True}


def test_bracket(client):
    r = client.post("/algebra/bracket", json={"x": "[L1, L2]", "y": "I-3"})
    assert r.status_code == 200
    # [-L3, I-3] = -(3 I0 + 12 CLI)
    assert r.json() == {"result": "-3*I0 - 12*CLI"}


def test_bracket_parse_error_is_400(client):
    r = client.post("/algebra/bracket", json={"x": "L1 +", "y": "L2"})
    assert r.status_code == 400
    assert "position 4" in r.json()["detail"]


def test_hom_bracket(client):
    r = client.post("/algebra/hom-bracket", json={"endo": {"k": 2}, "x": "L1", "y": "L2"})
    assert r.json()["result"] == "-1/2*L6"


def test_calibrate(client):
    r = client.post("/endo/calibrate", json={"endo": {"k": 2, "d": "1"}, "window": 4})
    assert r.status_code == 200
    body = r.json()
    assert body["corrections"]["p1"] == "1/16"
    assert body["corrections"]["p3"] == "1"
    assert body["endo"]["k"] == 2


def test_apply(client):
    r = client.post("/endo/apply", json={"endo": {"k": -1}, "x": "L2"})
    assert r.json()["result"] == "-L-2"


def test_invalid_endo_is_400(client):
    r = client.post("/endo/calibrate", json={"endo": {"k": 0}})
    assert r.status_code == 400


def test_act(client):
    body = {"family": {"family": "u", "F": "2"}, "x": "I1", "v": "v-1"}
    assert client.post("/modules/act", json=body).json()["result"] == "-2*v0"


def test_admissible(client):
    body = {"family": {"family": "abf", "alpha": "1/3", "F": "1"}, "endo": {"k": 4}}
    r = client.post("/modules/admissible", json=body)
    assert r.status_code == 200
    assert r.json()["q"] == 1


def test_admissible_violation_is_400(client):
    body = {"family": {"family": "abf", "alpha": "1/3", "F": "1"}, "endo": {"k": 4, "b": "2"}}
    r = client.post("/modules/admissible", json=body)
    assert r.status_code == 400
    assert "b=1" in r.json()["detail"]


def test_weight(client):
    body = {"family": {"family": "abf", "alpha": "1/3", "F": "1"}, "endo": {"k": 1}}
    assert client.post("/modules/weight", json=body).json()["weight"] is True


def test_solve_twist(client):
    body = {"family": {"family": "abf", "alpha": "1", "F": "1"}, "endo": {"k": 2, "b": "2"}, "window": 6}
    r = client.post("/modules/solve-twist", json=body)
    assert r.status_code == 200
    assert r.json()["dimension"] == 0


def test_check_suite(client):
    r = client.post("/checks/antisym", json={"window": 3})
    assert r.status_code == 200
    assert r.json()["status"] == "pass"


def test_failing_check_is_still_200(client):
    r = client.post("/checks/endo-hom", json={"k": 2, "corrections": "printed", "window": 3})
    assert r.status_code == 200
    assert r.json()["status"] == "fail"


def test_unknown_suite_is_404(client):
    assert client.post("/checks/nope", json={}).status_code == 404


def test_audit_lemma28(client):
    r = client.post("/audits/lemma28", json={"endo": {"d": "1"}, "window": 4})
    assert r.status_code == 200
    mismatched = {e["component"] for e in r.json()["entries"] if e["verdict"] == "mismatch"}
    assert mismatched == {"p3", "p5"}


def test_unknown_audit_is_404(client):
    assert client.post("/audits/nope", json={}).status_code == 404
