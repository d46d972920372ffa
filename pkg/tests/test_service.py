"""HTTP service endpoints, driven through the in-process test client."""

import pytest
from fastapi.testclient import TestClient

from sesqui.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_encode(client):
    r = client.get("/encode/11")
    assert r.status_code == 200
    assert r.json() == {"n": 11, "numeral": "2102", "digit_count": 4}


def test_encode_rejects_negative(client):
    assert client.get("/encode/-3").status_code in (400, 422)


def test_decode(client):
    r = client.get("/decode/11")
    assert r.status_code == 200
    body = r.json()
    assert body["numerator"] == 5 and body["denominator"] == 2
    assert body["is_integer"] is False

    r = client.get("/decode/212")
    assert r.json()["numerator"] == 8
    assert r.json()["is_integer"] is True


def test_decode_rejects_junk(client):
    assert client.get("/decode/2x1").status_code == 400


def test_sequence_listing(client):
    r = client.get("/sequences")
    assert r.status_code == 200
    listing = r.json()
    names = [s["name"] for s in listing]
    assert len(names) == 23
    assert "a024629" in names and "a305753" in names
    assert all("description" in s and "forms" in s for s in listing)


def test_sequence_terms(client):
    r = client.get("/sequences/evenmelon", params={"count": 8})
    assert r.status_code == 200
    body = r.json()
    assert body["name"] == "a304274"
    assert len(body["terms"]) == 8

    r = client.get("/sequences/largest-even", params={"count": 5, "form": "value"})
    assert r.json()["terms"] == ["2", "4", "8", "14", "22"]


def test_sequence_unknown_is_404(client):
    assert client.get("/sequences/a000042").status_code == 404


def test_sequence_count_capped(client):
    assert client.get("/sequences/a024629", params={"count": 10001}).status_code == 422


def test_tree(client):
    r = client.get("/tree", params={"depth": 4})
    assert r.status_code == 200
    values = [node["value"] for node in r.json()["nodes"]]
    assert values == [2, 4, 6, 10, 8, 12, 14]  # preorder
    assert client.get("/tree", params={"depth": 0}).status_code == 422
    assert client.get("/tree", params={"depth": 31}).status_code == 422


def test_divisibility(client):
    r = client.get("/divisibility/12")
    assert r.status_code == 200
    body = r.json()
    assert body["trailing_zeros"] == 1 and body["alt_digit_sum_mod5"] == 2
    assert client.get("/divisibility/0").status_code == 400


def test_classify(client):
    r = client.post(
        "/fibs/classify",
        json={"mode": "reverse", "start": ["0", "1"]},
    )
    assert r.status_code == 200
    assert r.json() == {
        "kind": "reverse_cycle",
        "entry_index": 7,
        "witness": ["221", "221", "2211"],
        "twos": 2,
    }


def test_classify_rejects_zero_pair(client):
    r = client.post("/fibs/classify", json={"mode": "sorted", "start": ["0", "0"]})
    assert r.status_code == 400


def test_classify_cap_exhaustion_is_500(client):
    r = client.post(
        "/fibs/classify",
        json={"mode": "sorted", "start": ["2", "22"], "cap": 4},
    )
    assert r.status_code == 500


def test_sweep(client):
    r = client.post("/fibs/sweep", json={"mode": "sorted", "max_digits": 6})
    assert r.status_code == 200
    body = r.json()
    assert body["cap_exceeded"] == 0
    assert {row["kind"] for row in body["rows"]} <= {"pinocchio_tail", "sorted_cycle"}
    assert sum(row["count"] for row in body["rows"]) == body["total_pairs"]


def test_sweep_bounds_max_digits(client):
    assert client.post("/fibs/sweep", json={"mode": "sorted", "max_digits": 17}).status_code == 422


def test_bfile_verify(client):
    r = client.post("/bfile/verify", json={"name": "a005428", "content": "0 1\n1 1\n2 2\n3 3\n"})
    assert r.status_code == 200
    assert r.json()["ok"] is True

    r = client.post("/bfile/verify", json={"name": "a005428", "content": "0 1\n1 1\n2 9\n"})
    assert r.status_code == 200
    body = r.json()
    assert body["ok"] is False
    assert body["mismatch"]["index"] == 2

    assert client.post("/bfile/verify", json={"name": "zzz", "content": "1 1\n"}).status_code == 404
    assert client.post("/bfile/verify", json={"name": "a005428", "content": "1 x\n"}).status_code == 400
