import pytest
from fastapi.testclient import TestClient

from cminor.service import app
from conftest import EX1_ROWS, FIG5_ROWS


@pytest.fixture
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_permanent(client):
    response = client.post("/matrix/permanent", json={"entries": EX1_ROWS})
    assert response.status_code == 200
    doc = response.json()
    assert doc["function"] == "permanent"
    assert doc["result"]["value"] == "4"
    assert doc["strategy"] == "memo"
    assert isinstance(doc["elapsed_ms"], int)


def test_classes_golden(client):
    response = client.post("/matrix/classes", json={"entries": FIG5_ROWS, "mod": 3})
    assert response.status_code == 200
    assert response.json()["result"]["counts"] == ["13", "9", "10"]


def test_evenodd(client):
    doc = client.post("/matrix/evenodd", json={"entries": EX1_ROWS}).json()
    assert doc["result"] == {"even": "2", "odd": "2", "determinant": "0"}


def test_determinant_signed_string(client):
    doc = client.post("/matrix/determinant", json={"entries": [[1, 2], [3, 4]]}).json()
    assert doc["result"]["value"] == "-2"


def test_cycles(client):
    doc = client.post("/matrix/cycles", json={"entries": [[1, 1, 1]] * 3}).json()
    assert doc["result"]["value"] == "2"


def test_stirling(client):
    doc = client.post("/matrix/stirling", json={"entries": [[1, 1, 1]] * 3}).json()
    assert doc["result"]["counts"] == ["2", "3", "1"]


def test_indicator_sorted_terms(client):
    doc = client.post("/matrix/indicator", json={"entries": [[1, 1, 1]] * 3}).json()
    assert doc["result"]["terms"] == [
        {"exponents": [0, 0, 1], "coefficient": "2"},
        {"exponents": [1, 1, 0], "coefficient": "3"},
        {"exponents": [3, 0, 0], "coefficient": "1"},
    ]


def test_check_oracle_ok(client):
    doc = client.post(
        "/matrix/classes",
        json={"entries": FIG5_ROWS, "mod": 3, "check_oracle": True},
    ).json()
    assert doc["result"]["oracle_check"] == "ok"


def test_check_oracle_skipped_above_cap(client):
    entries = [[1 if i == j else 0 for j in range(10)] for i in range(10)]
    doc = client.post(
        "/matrix/permanent", json={"entries": entries, "check_oracle": True}
    ).json()
    assert doc["result"]["oracle_check"] == "skipped"


def test_oracle_mismatch_is_alarm(client, monkeypatch):
    from cminor import expansions

    monkeypatch.setattr(expansions.Engine, "permanent", lambda self, matrix: 999)
    response = client.post(
        "/matrix/permanent", json={"entries": EX1_ROWS, "check_oracle": True}
    )
    assert response.status_code == 500
    assert response.json()["error"]["category"] == "oracle_mismatch"


def test_precondition_error(client):
    response = client.post("/matrix/permanent", json={"entries": [[1, 2], [3]]})
    assert response.status_code == 400
    assert response.json()["error"]["category"] == "precondition"


def test_validation_error_is_parse(client):
    response = client.post("/matrix/classes", json={"entries": EX1_ROWS, "mod": 0})
    assert response.status_code == 422
    assert response.json()["error"]["category"] == "parse"


def test_guard_refusal(client):
    response = client.post(
        "/matrix/permanent", json={"entries": EX1_ROWS, "max_n": 2}
    )
    assert response.status_code == 409
    assert response.json()["error"]["category"] == "guard"


def test_strategies_same_result(client):
    values = set()
    for strategy in ("naive", "memo", "parallel"):
        doc = client.post(
            "/matrix/classes",
            json={"entries": FIG5_ROWS, "mod": 3, "strategy": strategy},
        ).json()
        assert doc["strategy"] == strategy
        values.add(tuple(doc["result"]["counts"]))
    assert len(values) == 1


def test_divisor_sequence(client):
    doc = client.post(
        "/divisors/sequence", json={"factors": [[2, 1], [3, 1]], "check_oracle": True}
    ).json()
    assert doc["function"] == "divseq"
    assert doc["result"]["divisors"] == ["6", "3", "2", "1"]
    assert doc["result"]["path_count"] == "2"
    assert doc["result"]["cycle_count"] == "2"
    assert doc["result"]["oracle_check"] == "ok"


def test_divisor_non_prime(client):
    response = client.post("/divisors/sequence", json={"factors": [[6, 1]]})
    assert response.status_code == 400
    assert response.json()["error"]["category"] == "precondition"


def test_hypercube(client):
    doc = client.post("/divisors/hypercube", json={"dim": 2}).json()
    assert doc["function"] == "hypercube"
    assert doc["result"]["n"] == "6"
    assert doc["result"]["cycle_count"] == "2"


def test_hypercube_guard(client):
    response = client.post("/divisors/hypercube", json={"dim": 5})
    assert response.status_code == 409
    assert response.json()["error"]["category"] == "guard"
