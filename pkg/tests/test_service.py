from fastapi.testclient import TestClient

from crepanto.service import app

client = TestClient(app)


def test_index():
    resp = client.get("/")
    assert resp.status_code == 200
    assert resp.json()["service"] == "crepanto"


def test_analyze_endpoint():
    resp = client.post("/analyze", json={"l": 9, "weights": [1, 2, 3, 3]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["command"] == "analyze"
    assert body["result"]["criterion"]["passes"] is False
    assert [5, 1, 6, 6] in body["result"]["criterion"]["violators"]


def test_analyze_firla_ziegler_instance():
    resp = client.post("/analyze", json={"l": 39, "weights": [1, 5, 8, 25]})
    assert resp.json()["result"]["criterion"]["passes"] is True


def test_hilbert_endpoint():
    resp = client.post("/hilbert", json={"l": 5, "weights": [1, 4]})
    assert resp.json()["result"]["count"] == 6


def test_cohomology_endpoint():
    resp = client.post("/cohomology", json={"l": 7, "weights": [1, 2, 4]})
    body = resp.json()["result"]
    assert body["dims"] == [1, 3, 3]
    assert body["closed_form_3d"]["agrees"] is True


def test_non_gorenstein_is_422():
    resp = client.post("/cohomology", json={"l": 5, "weights": [1, 1, 1]})
    assert resp.status_code == 422


def test_resolve_series_endpoint():
    resp = client.post("/resolve-series", json={"l": 10, "r": 3})
    body = resp.json()["result"]
    assert body["basic"] is True
    assert body["unique"] is True
    assert body["euler_characteristic"] == 10
    kinds = [d["kind"] for d in body["divisors"]]
    assert kinds == ["hk_bundle"] * 4 + ["projective_space_times_line"]
    twists = [d["twist"] for d in body["divisors"][:4]]
    assert twists == [8, 6, 4, 2]


def test_resolve_series_non_basic():
    resp = client.post("/resolve-series", json={"l": 5, "r": 4})
    body = resp.json()["result"]
    assert body["basic"] is False
    assert body["euler_characteristic"] == 4
    assert body["residual"] == {"kind": "isolated", "order": 2, "weights": [1, 1, 1, 1]}


def test_scan_matches_remainder_rule():
    resp = client.post("/resolve-series/scan", json={"l_min": 4, "l_max": 20, "r": 4})
    rows = resp.json()["result"]["rows"]
    for row in rows:
        assert row["basic"] == (row["l"] % 3 in (0, 1))


def test_factorize_endpoint():
    resp = client.post("/factorize", json={"l": 11, "r": 3, "mode": "speedy"})
    assert resp.json()["result"]["step_count"] == 3
    resp = client.post("/factorize", json={"l": 5, "r": 2, "mode": "stepwise"})
    assert resp.json()["result"]["step_count"] == 4


def test_bundle_endpoint():
    resp = client.post("/bundle", json={"r": 3, "twists": [2]})
    body = resp.json()["result"]
    assert body["canonical_self_intersection"] == -62
    assert body["e_self_intersection"] == 4
    assert body["embedding_dimension"] == 12
    assert body["anticanonical"]["volume"] == "31/3"
    assert body["anticanonical"]["agrees_with_formula"] is True


def test_triangulate_check_roundtrip():
    resolved = client.post("/resolve-series", json={"l": 7, "r": 3}).json()
    payload = resolved["result"]["triangulation"]
    resp = client.post("/triangulate/check", json=payload)
    body = resp.json()["result"]
    assert body == {
        "valid": True,
        "maximal": True,
        "basic": True,
        "crepant": True,
        "coherent": True,
        "epsilon": body["epsilon"],
    }
    assert body["epsilon"] not in (0, "0")


def test_deterministic_output():
    a = client.post("/analyze", json={"l": 9, "weights": [1, 2, 3, 3]}).text
    b = client.post("/analyze", json={"l": 9, "weights": [1, 2, 3, 3]}).text
    assert a == b
