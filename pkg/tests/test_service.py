import numpy as np
import pytest
from fastapi.testclient import TestClient

from octe6 import serialize as sz
from octe6.octonion import unit
from octe6.service import app
from conftest import random_hermitian

client = TestClient(app)

DIAG123 = {"diag": [1.0, 2.0, 3.0], "o12": [0.0] * 8, "o13": [0.0] * 8, "o23": [0.0] * 8}


class TestHealthAndCatalog:
    def test_health(self):
        r = client.get("/health")
        assert r.status_code == 200
        assert r.json()["status"] == "ok"

    def test_families(self):
        r = client.get("/families")
        body = r.json()
        assert body["count"] == 78
        assert "rot:xy:l" in body["ids"]


class TestTable:
    def test_shape_and_entries(self):
        body = client.get("/table").json()
        assert body["units"] == ["i", "j", "k", "kl", "jl", "il", "l"]
        assert len(body["rows"]) == 7
        # k * l = kl sits at row k, column l
        assert body["rows"][2][6] == "kl"
        assert body["rows"][0][0] == "-1"


class TestApply:
    def test_zx_rotation(self):
        req = {"matrix": DIAG123, "family": "rot:zx:I", "parameter": float(np.pi / 2)}
        body = client.post("/apply", json=req).json()
        assert body["det_before"] == pytest.approx(6.0)
        assert body["det_after"] == pytest.approx(6.0)
        assert body["matrix"]["diag"][0] == pytest.approx(1.5)
        assert body["matrix"]["o12"][0] == pytest.approx(-0.5)

    def test_round_trips_through_wire(self, rng):
        x = random_hermitian(rng, 1)[0]
        req = {"matrix": sz.matrix_to_obj(x), "family": "rot:xy:l", "parameter": 0.0}
        body = client.post("/apply", json=req).json()
        assert np.array_equal(sz.matrix_from_obj(body["matrix"]), x)

    def test_unknown_family(self):
        req = {"matrix": DIAG123, "family": "rot:xy:zz", "parameter": 0.1}
        r = client.post("/apply", json=req)
        assert r.status_code == 404
        assert r.json()["error"] == "unknown_family"

    def test_not_hermitian(self):
        bad = dict(DIAG123)
        bad["o12"] = sz.octonion_to_list(unit("k"))
        bad["o21"] = sz.octonion_to_list(unit("k"))
        r = client.post("/apply", json={"matrix": bad, "family": "rot:xy:l", "parameter": 0.1})
        assert r.status_code == 400
        assert r.json()["error"] == "not_hermitian"

    def test_malformed_body(self):
        r = client.post("/apply", json={"matrix": {"diag": [1, 2]}, "family": "x", "parameter": 0})
        assert r.status_code == 422  # pydantic validation

    def test_non_finite_rejected(self):
        bad = dict(DIAG123)
        bad["diag"] = [1.0, 2.0, float("1e400")]
        r = client.post(
            "/apply",
            content='{"matrix": {"diag": [1.0, 2.0, 1e400], "o12": %s, "o13": %s, "o23": %s}, "family": "rot:xy:l", "parameter": 0.0}'
            % (([0.0] * 8), ([0.0] * 8), ([0.0] * 8)),
            headers={"content-type": "application/json"},
        )
        assert r.status_code in (400, 422)


class TestDecompose:
    def test_diagonal(self):
        body = client.post("/decompose", json={"matrix": DIAG123}).json()
        assert body["eigenvalues"] == pytest.approx([3.0, 2.0, 1.0])
        assert not body["degenerate"]
        assert body["residuals"]["reconstruction"] < 1e-10
        top = body["pairs"][0]["idempotent"]
        assert top["diag"] == pytest.approx([0.0, 0.0, 1.0])

    def test_reconstruction_from_wire(self, rng):
        x = random_hermitian(rng, 1)[0]
        body = client.post("/decompose", json={"matrix": sz.matrix_to_obj(x)}).json()
        recon = sum(
            lam * sz.matrix_from_obj(pair["idempotent"])
            for lam, pair in zip(body["eigenvalues"], body["pairs"])
        )
        assert np.abs(recon - x).max() < 1e-8


class TestVerifyEndpoint:
    def test_small_run_passes(self):
        body = client.post("/verify", json={"seed": 9, "trials": 300}).json()
        assert body["passed"] is True
        assert set(body["suites"]) == {"octonion", "jordan", "e6", "trace_identity", "inner_automorphism"}

    def test_suite_selection(self):
        body = client.post("/verify", json={"seed": 9, "trials": 300, "suites": ["octonion"]}).json()
        assert list(body["suites"]) == ["octonion"]

    def test_unknown_suite(self):
        r = client.post("/verify", json={"seed": 9, "trials": 300, "suites": ["bogus"]})
        assert r.status_code == 400


class TestDims:
    def test_ranks(self):
        body = client.get("/dims").json()
        assert body["passed"] is True
        subsets = body["subsets"]
        expected = {"E6": 78, "F4": 52, "boosts": 26, "G2": 14, "SU3": 8, "SO8": 28, "SO7": 21,
                    "SO8_triality": 28, "E6_naive": 78}
        for name, rank in expected.items():
            assert subsets[name]["rank"] == rank, name
            assert subsets[name]["passed"], name
        assert subsets["SO8_triality"]["gap"] is not None
        assert subsets["SO8_triality"]["gap"] >= 1e3


class TestStates:
    def test_sixteen_states(self):
        body = client.get("/states").json()
        assert body["count"] == 16
        assert body["generations"] == ["i", "j", "k"]
        for state in body["states"]:
            assert state["residual_norm"] <= 1e-12
            assert abs(state["det_p"]) <= 1e-12
            assert state["star_residual"] <= 1e-12
        sterile = [s for s in body["states"] if s["label"] == "sterile"]
        assert len(sterile) == 1 and sterile[0]["generation"] is None
