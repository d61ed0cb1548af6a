import json

import pytest
from fastapi.testclient import TestClient

from wythoff.engine import Move, apply_move, canonical_spec
from wythoff.service import create_app

from conftest import xor_all


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


def make_session(client, n, start, human_first):
    resp = client.post(
        "/api/session", json={"n": n, "start": list(start), "human_first": human_first}
    )
    assert resp.status_code == 200
    return resp.json()


# --- verdict ---------------------------------------------------------------


def test_verdict_p_position(client):
    resp = client.get("/api/verdict", params={"pos": "1,2,3"})
    assert resp.status_code == 200
    assert resp.json() == {"is_p": True, "nim_sum": 0}


def test_verdict_n_position(client):
    resp = client.get("/api/verdict", params={"pos": "1,1,1"})
    assert resp.status_code == 200
    assert resp.json() == {"is_p": False, "nim_sum": 1}


def test_verdict_even_dimension_is_422(client):
    assert client.get("/api/verdict", params={"pos": "1,2"}).status_code == 422


def test_verdict_malformed_is_400(client):
    assert client.get("/api/verdict", params={"pos": "1,x,3"}).status_code == 400
    assert client.get("/api/verdict", params={"pos": "1,-2,3"}).status_code == 400


# --- session creation ---------------------------------------------------------


def test_create_human_first_session(client):
    state = make_session(client, 3, (1, 2, 3), human_first=True)
    assert state["status"] == "human-to-move"
    assert state["position"] == [1, 2, 3]
    assert state["start"] == [1, 2, 3]
    assert state["history"] == []
    assert state["winner"] is None


def test_create_engine_first_session_restores_zero(client):
    state = make_session(client, 3, (1, 1, 1), human_first=False)
    assert state["status"] == "human-to-move"
    assert len(state["history"]) == 1
    entry = state["history"][0]
    assert entry["mover"] == "engine"
    assert xor_all(state["position"]) == 0
    assert entry["position"] == state["position"]


def test_create_terminal_start_human_first(client):
    state = make_session(client, 3, (0, 0, 0), human_first=True)
    assert state["status"] == "finished"
    assert state["winner"] == "engine"


def test_create_terminal_start_engine_first(client):
    state = make_session(client, 3, (0, 0, 0), human_first=False)
    assert state["status"] == "finished"
    assert state["winner"] == "human"


def test_engine_first_from_p_position_moves_anyway(client):
    state = make_session(client, 3, (1, 2, 3), human_first=False)
    assert state["status"] == "human-to-move"
    assert len(state["history"]) == 1
    # a mover at nim-sum 0 cannot stay at nim-sum 0
    assert xor_all(state["position"]) != 0


def test_create_session_malformed_body(client):
    resp = client.post(
        "/api/session", content=b"{", headers={"content-type": "application/json"}
    )
    assert resp.status_code == 400
    assert client.post("/api/session", json={"n": 3}).status_code == 400
    assert (
        client.post(
            "/api/session", json={"n": 3, "start": [1, 2], "human_first": True}
        ).status_code
        == 400
    )
    assert (
        client.post(
            "/api/session", json={"n": 3, "start": [1, -2, 3], "human_first": True}
        ).status_code
        == 400
    )
    assert client.post("/api/session", json=[1, 2, 3]).status_code == 400


def test_create_session_even_dimension(client):
    resp = client.post(
        "/api/session", json={"n": 4, "start": [1, 2, 3, 4], "human_first": True}
    )
    assert resp.status_code == 422


# --- playing moves ---------------------------------------------------------------


def test_move_flow_engine_replies_to_zero(client):
    state = make_session(client, 3, (1, 2, 3), human_first=True)
    resp = client.post(
        f"/api/session/{state['id']}/move", json={"vector": [1, 0, 0], "k": 1}
    )
    assert resp.status_code == 200
    after = resp.json()
    assert [h["mover"] for h in after["history"]] == ["human", "engine"]
    assert after["history"][0]["position"] == [0, 2, 3]
    assert xor_all(after["position"]) == 0
    assert after["status"] == "human-to-move"


def test_human_winning_move_finishes_game(client):
    state = make_session(client, 3, (2, 0, 0), human_first=True)
    resp = client.post(
        f"/api/session/{state['id']}/move", json={"vector": [1, 0, 0], "k": 2}
    )
    assert resp.status_code == 200
    after = resp.json()
    assert after["status"] == "finished"
    assert after["winner"] == "human"
    assert after["position"] == [0, 0, 0]


def test_engine_takes_last_move_and_wins(client):
    state = make_session(client, 3, (1, 1, 0), human_first=True)
    resp = client.post(
        f"/api/session/{state['id']}/move", json={"vector": [1, 0, 0], "k": 1}
    )
    after = resp.json()
    assert after["status"] == "finished"
    assert after["winner"] == "engine"
    assert after["position"] == [0, 0, 0]


def test_illegal_move_is_422(client):
    state = make_session(client, 3, (1, 2, 3), human_first=True)
    resp = client.post(
        f"/api/session/{state['id']}/move", json={"vector": [1, 1, 1], "k": 5}
    )
    assert resp.status_code == 422
    # k = 0 is not a move either
    resp = client.post(
        f"/api/session/{state['id']}/move", json={"vector": [1, 0, 0], "k": 0}
    )
    assert resp.status_code == 422
    # unknown vector
    resp = client.post(
        f"/api/session/{state['id']}/move", json={"vector": [2, 0, 0], "k": 1}
    )
    assert resp.status_code == 422
    # session untouched by the rejected attempts
    current = client.get(f"/api/session/{state['id']}").json()
    assert current["position"] == [1, 2, 3]
    assert current["history"] == []
    assert current["status"] == "human-to-move"


def test_move_on_unknown_session_is_404(client):
    resp = client.post(
        "/api/session/no-such-id/move", json={"vector": [1, 0, 0], "k": 1}
    )
    assert resp.status_code == 404


def test_move_on_finished_game_is_409(client):
    state = make_session(client, 3, (2, 0, 0), human_first=True)
    client.post(f"/api/session/{state['id']}/move", json={"vector": [1, 0, 0], "k": 2})
    resp = client.post(
        f"/api/session/{state['id']}/move", json={"vector": [1, 0, 0], "k": 1}
    )
    assert resp.status_code == 409


def test_move_malformed_body_is_400(client):
    state = make_session(client, 3, (1, 2, 3), human_first=True)
    resp = client.post(
        f"/api/session/{state['id']}/move",
        content=b"not json",
        headers={"content-type": "application/json"},
    )
    assert resp.status_code == 400
    resp = client.post(f"/api/session/{state['id']}/move", json={"vector": [1, 0, 0]})
    assert resp.status_code == 400


def test_get_session_round_trip(client):
    state = make_session(client, 5, (1, 2, 3, 4, 4), human_first=True)
    fetched = client.get(f"/api/session/{state['id']}").json()
    assert fetched == state
    assert client.get("/api/session/missing").status_code == 404


def test_history_replays_to_current_position(client):
    state = make_session(client, 3, (7, 5, 6), human_first=False)
    sid = state["id"]
    for vector, k in [((0, 0, 1), 2), ((1, 0, 0), 1)]:
        resp = client.post(
            f"/api/session/{sid}/move", json={"vector": list(vector), "k": k}
        )
        assert resp.status_code == 200
    final = client.get(f"/api/session/{sid}").json()
    pos = tuple(final["start"])
    for entry in final["history"]:
        move = Move(tuple(entry["move"]["vector"]), entry["move"]["k"])
        pos = apply_move(pos, move)
        assert list(pos) == entry["position"]
    assert list(pos) == final["position"]


# --- hints ------------------------------------------------------------------------


def test_hints_counts(client):
    state = make_session(client, 3, (1, 1, 1), human_first=True)
    hints = client.get(f"/api/session/{state['id']}/hints").json()
    assert len(hints) == 4
    vectors = {tuple(h["vector"]) for h in hints}
    assert vectors == set(canonical_spec(3).vectors)

    state = make_session(client, 3, (1, 2, 3), human_first=True)
    assert client.get(f"/api/session/{state['id']}/hints").json() == []

    state = make_session(client, 3, (2, 0, 0), human_first=True)
    hints = client.get(f"/api/session/{state['id']}/hints").json()
    assert hints == [{"vector": [1, 0, 0], "k": 2}]

    assert client.get("/api/session/missing/hints").status_code == 404


# --- sponge ------------------------------------------------------------------------


def test_sponge_level1(client):
    resp = client.get("/api/sponge", params={"n": 3, "m": 1})
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("application/json")
    payload = resp.json()
    assert payload["points"] == [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_sponge_m6_has_4096_points(client):
    payload = client.get("/api/sponge", params={"n": 3, "m": 6}).json()
    assert len(payload["points"]) == 4096
    assert all(max(p) < 64 for p in payload["points"])


def test_sponge_is_cached_and_deterministic(client):
    first = client.get("/api/sponge", params={"n": 3, "m": 4})
    second = client.get("/api/sponge", params={"n": 3, "m": 4})
    assert first.content == second.content


def test_sponge_even_dimension_is_422(client):
    assert client.get("/api/sponge", params={"n": 4, "m": 2}).status_code == 422


def test_sponge_negative_level_is_400(client):
    assert client.get("/api/sponge", params={"n": 3, "m": -1}).status_code == 400


def test_sponge_over_budget_is_413():
    with TestClient(create_app(max_points=100)) as small:
        resp = small.get("/api/sponge", params={"n": 3, "m": 5})
        assert resp.status_code == 413
        assert small.get("/api/sponge", params={"n": 3, "m": 3}).status_code == 200


def test_session_expiry():
    with TestClient(create_app(session_ttl=0.0)) as c:
        state = c.post(
            "/api/session", json={"n": 3, "start": [1, 2, 3], "human_first": True}
        ).json()
        import time

        time.sleep(0.01)
        assert c.get(f"/api/session/{state['id']}").status_code == 404
