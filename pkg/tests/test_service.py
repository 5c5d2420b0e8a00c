"""Tests for the HTTP session service.

REST flows run in-process through an ASGI transport. The event-stream
endpoint and the reply-latency check run against a real server on an
ephemeral port, because the in-process transport buffers whole bodies.
"""
from __future__ import annotations

import asyncio
import contextlib
import json
import threading
import time

import httpx
import pytest

import boardkit.arena
from boardkit.core.notation import move_from_text, serialize_state
from boardkit.difficulty import PRESETS
from boardkit.games import GameId, board_text, new_game, variant_from_string
from boardkit.service import AI_THINKING, AWAITING_HUMAN, FINISHED, create_app

FAST = 0.02  # AI time budget that keeps in-process tests quick


@pytest.fixture
def anyio_backend():
    return "asyncio"


def make_client(**app_kwargs) -> httpx.AsyncClient:
    app_kwargs.setdefault("default_budget", FAST)
    transport = httpx.ASGITransport(app=create_app(**app_kwargs))
    return httpx.AsyncClient(transport=transport, base_url="http://app")


@pytest.fixture
async def client():
    async with make_client() as c:
        yield c


async def wait_while_thinking(client, session_id, timeout=30.0):
    """Poll the session until the AI reply lands; return the payload."""
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        response = await client.get(f"/sessions/{session_id}")
        assert response.status_code == 200
        payload = response.json()
        if payload["status"] != AI_THINKING:
            return payload
        await asyncio.sleep(0.01)
    raise AssertionError("AI reply never arrived")


async def create(client, **overrides):
    body = {"game": "tictactoe", **overrides}
    response = await client.post("/sessions", json=body)
    assert response.status_code == 201, response.text
    return response.json()


@pytest.mark.anyio
class TestCatalog:
    async def test_games_listing(self, client):
        response = await client.get("/games")
        assert response.status_code == 200
        data = response.json()
        variants = {entry["id"]: entry["variants"] for entry in data["games"]}
        assert set(variants) == {g.value for g in GameId}
        assert variants["tapatan"] == ["default", "ludii"]
        assert variants["alquerque"] == ["default", "ludii"]
        for game in ("tictactoe", "tsoro-yematatu", "five-field-kono", "reversi"):
            assert variants[game] == ["default"]
        presets = data["difficulty_presets"]
        assert set(presets) == {"Easy", "Medium", "Hard"}
        for name, params in PRESETS.items():
            assert presets[name] == {"mu": params.mu, "sigma": params.sigma}
        assert data["default_time_budget"] == FAST

    async def test_board_text_endpoint(self, client):
        response = await client.get("/games/reversi/board")
        assert response.status_code == 200
        assert response.headers["content-type"].startswith("text/plain")
        assert response.text == board_text("reversi")

    async def test_board_unknown_game(self, client):
        response = await client.get("/games/chess/board")
        assert response.status_code == 404
        assert "chess" in response.json()["detail"]


@pytest.mark.anyio
class TestCreateSession:
    async def test_defaults(self, client):
        payload = await create(client)
        assert payload["id"]
        assert payload["game"] == "tictactoe"
        assert payload["variant"] == "default"
        assert payload["status"] == AWAITING_HUMAN
        assert payload["to_move"] == "P1"
        assert payload["plies"] == 0
        assert len(payload["legal_moves"]) == 9
        assert "b2" in payload["legal_moves"]
        assert payload["outcome"] is None
        assert payload["human_side"] == "P1"
        medium = PRESETS["Medium"]
        assert payload["difficulty"] == {
            "name": "Medium", "mu": medium.mu, "sigma": medium.sigma}
        assert payload["time_budget"] == FAST
        assert payload["history"] == []
        assert payload["evaluation"] is None

    async def test_variant_and_custom_difficulty(self, client):
        payload = await create(
            client, game="alquerque", variant="ludii",
            difficulty={"mu": 0.8, "sigma": 0.2}, time_budget=0.05)
        assert payload["variant"] == "ludii"
        assert payload["difficulty"] == {"name": None, "mu": 0.8, "sigma": 0.2}
        assert payload["time_budget"] == 0.05

    async def test_preset_name_is_normalized(self, client):
        payload = await create(client, difficulty="hArD")
        hard = PRESETS["Hard"]
        assert payload["difficulty"] == {
            "name": "Hard", "mu": hard.mu, "sigma": hard.sigma}

    async def test_unknown_game(self, client):
        response = await client.post("/sessions", json={"game": "chess"})
        assert response.status_code == 422
        detail = response.json()["detail"]
        assert "chess" in detail and "tictactoe" in detail

    async def test_unknown_variant(self, client):
        response = await client.post(
            "/sessions", json={"game": "reversi", "variant": "ludii"})
        assert response.status_code == 422
        assert "ludii" in response.json()["detail"]

    async def test_unknown_preset(self, client):
        response = await client.post(
            "/sessions", json={"game": "tictactoe", "difficulty": "brutal"})
        assert response.status_code == 422
        assert "Easy" in response.json()["detail"]

    @pytest.mark.parametrize("difficulty", [
        {"mu": 0.5, "sigma": -0.1},   # invalid spread
        {"mu": 0.5},                  # missing field
        {"mu": 0.5, "sigma": 0.2, "colour": 1},  # unknown field
    ])
    async def test_bad_difficulty_params(self, client, difficulty):
        response = await client.post(
            "/sessions", json={"game": "tictactoe", "difficulty": difficulty})
        assert response.status_code == 422

    async def test_bad_human_side(self, client):
        response = await client.post(
            "/sessions", json={"game": "tictactoe", "human_side": "white"})
        assert response.status_code == 422
        assert response.json()["detail"] == "human_side must be P1 or P2"

    @pytest.mark.parametrize("budget", [0.001, 61.0, -1.0])
    async def test_budget_out_of_range(self, client, budget):
        response = await client.post(
            "/sessions", json={"game": "tictactoe", "time_budget": budget})
        assert response.status_code == 422
        assert "between 0.01 and 60" in response.json()["detail"]

    @pytest.mark.parametrize("budget", [0.01, 60.0])
    async def test_budget_bounds_accepted(self, client, budget):
        payload = await create(client, time_budget=budget)
        assert payload["time_budget"] == budget

    async def test_missing_game_field(self, client):
        response = await client.post("/sessions", json={})
        assert response.status_code == 422

    async def test_ai_moves_first(self, client):
        payload = await create(client, human_side="P2", seed=3)
        assert payload["status"] == AI_THINKING
        assert payload["legal_moves"] == []
        assert payload["human_side"] == "P2"
        payload = await wait_while_thinking(client, payload["id"])
        assert payload["status"] == AWAITING_HUMAN
        assert payload["to_move"] == "P2"
        assert payload["plies"] == 1
        assert len(payload["history"]) == 1


@pytest.mark.anyio
class TestSessionLifecycle:
    async def test_get_unknown_session(self, client):
        response = await client.get("/sessions/nope")
        assert response.status_code == 404
        assert response.json()["detail"] == "unknown session"

    async def test_session_expiry(self):
        async with make_client(session_ttl=0.05) as client:
            payload = await create(client, seed=1)
            sid = payload["id"]
            assert (await client.get(f"/sessions/{sid}")).status_code == 200
            await asyncio.sleep(0.12)
            assert (await client.get(f"/sessions/{sid}")).status_code == 404

    async def test_submit_move_flow(self, client):
        payload = await create(client, seed=9)
        sid = payload["id"]
        response = await client.post(f"/sessions/{sid}/moves", json={"move": "b2"})
        assert response.status_code == 200
        payload = response.json()
        assert payload["status"] == AI_THINKING
        assert payload["history"] == ["b2"]
        assert payload["plies"] == 1
        assert payload["legal_moves"] == []
        payload = await wait_while_thinking(client, sid)
        assert payload["status"] == AWAITING_HUMAN
        assert payload["to_move"] == "P1"
        assert payload["plies"] == 2
        assert payload["history"][0] == "b2"
        assert len(payload["history"]) == 2
        assert payload["history"][1] in (
            "a1", "a2", "a3", "b1", "b3", "c1", "c2", "c3")

    async def test_illegal_move_reports_rule(self, client):
        payload = await create(client, seed=9)
        sid = payload["id"]
        await client.post(f"/sessions/{sid}/moves", json={"move": "b2"})
        await wait_while_thinking(client, sid)
        response = await client.post(f"/sessions/{sid}/moves", json={"move": "b2"})
        assert response.status_code == 422
        assert response.json()["detail"] == "position occupied"

    async def test_bad_notation_reports_error(self, client):
        payload = await create(client, seed=9)
        sid = payload["id"]
        response = await client.post(f"/sessions/{sid}/moves", json={"move": "zz9"})
        assert response.status_code == 422
        assert response.json()["detail"] == "unknown position 'zz9'"

    async def test_move_rejected_while_thinking(self, client):
        payload = await create(client, human_side="P2", seed=4, time_budget=0.5)
        sid = payload["id"]
        response = await client.post(f"/sessions/{sid}/moves", json={"move": "b2"})
        assert response.status_code == 409
        assert response.json()["detail"] == f"session is {AI_THINKING}"
        await wait_while_thinking(client, sid)

    async def test_play_to_finish(self, client):
        payload = await create(client, seed=21)
        sid = payload["id"]
        for _ in range(20):
            if payload["status"] == FINISHED:
                break
            if payload["status"] == AI_THINKING:
                payload = await wait_while_thinking(client, sid)
                continue
            move = payload["legal_moves"][0]
            response = await client.post(
                f"/sessions/{sid}/moves", json={"move": move})
            assert response.status_code == 200
            payload = response.json()
        assert payload["status"] == FINISHED
        assert payload["legal_moves"] == []
        outcome = payload["outcome"]
        assert set(outcome) == {"winner", "draw"}
        assert outcome["winner"] in ("P1", "P2", None)
        assert isinstance(outcome["draw"], bool)
        assert outcome["draw"] == (outcome["winner"] is None)
        assert payload["plies"] == len(payload["history"])

        # The reported state must equal the history folded over the rules.
        spec = new_game("tictactoe", variant_from_string("tictactoe", "default"))
        state = spec.initial_state()
        for text in payload["history"]:
            state = spec.apply(state, move_from_text(spec, text))
        assert serialize_state(spec, state) == payload["state"]
        assert spec.is_terminal(state)

        response = await client.post(f"/sessions/{sid}/moves", json={"move": "a1"})
        assert response.status_code == 409
        assert response.json()["detail"] == f"session is {FINISHED}"

    async def test_evaluation_hidden_by_default(self, client):
        payload = await create(client, seed=5)
        sid = payload["id"]
        await client.post(f"/sessions/{sid}/moves", json={"move": "a1"})
        payload = await wait_while_thinking(client, sid)
        assert payload["evaluation"] is None

    async def test_evaluation_revealed_on_request(self, client):
        payload = await create(client, seed=5, reveal_evaluations=True)
        sid = payload["id"]
        await client.post(f"/sessions/{sid}/moves", json={"move": "a1"})
        payload = await wait_while_thinking(client, sid)
        evaluation = payload["evaluation"]
        assert isinstance(evaluation, dict) and evaluation
        assert payload["history"][1] in evaluation
        for text, value in evaluation.items():
            assert isinstance(text, str)
            assert 0.0 <= value <= 1.0

    async def test_ai_reply_uses_difficulty_selection(self, client, monkeypatch):
        calls = []
        real_select = boardkit.arena.stochastic_select

        def recorder(evaluation, params, rng):
            calls.append((params.mu, params.sigma))
            return real_select(evaluation, params, rng)

        monkeypatch.setattr(boardkit.arena, "stochastic_select", recorder)
        payload = await create(client, difficulty="hard", seed=6)
        sid = payload["id"]
        await client.post(f"/sessions/{sid}/moves", json={"move": "b2"})
        await wait_while_thinking(client, sid)
        hard = PRESETS["Hard"]
        assert calls == [(hard.mu, hard.sigma)]

    async def test_session_log_records_finished_games(self, tmp_path):
        log_path = tmp_path / "sessions.jsonl"
        async with make_client(log_path=str(log_path)) as client:
            payload = await create(client, seed=21)
            sid = payload["id"]
            for _ in range(20):
                if payload["status"] == FINISHED:
                    break
                if payload["status"] == AI_THINKING:
                    payload = await wait_while_thinking(client, sid)
                    continue
                response = await client.post(
                    f"/sessions/{sid}/moves",
                    json={"move": payload["legal_moves"][0]})
                payload = response.json()
            assert payload["status"] == FINISHED
        records = [json.loads(line) for line in
                   log_path.read_text().splitlines()]
        assert len(records) == 1
        assert records[0]["id"] == sid
        assert records[0]["game"] == "tictactoe"
        assert records[0]["history"] == payload["history"]
        assert records[0]["outcome"] == payload["outcome"]


@contextlib.contextmanager
def live_server(**app_kwargs):
    """Run the app under uvicorn on an ephemeral port in a thread."""
    import uvicorn

    config = uvicorn.Config(create_app(**app_kwargs), host="127.0.0.1",
                            port=0, log_level="warning")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    try:
        deadline = time.monotonic() + 15.0
        while not server.started:
            if time.monotonic() > deadline:
                raise RuntimeError("server did not start")
            time.sleep(0.01)
        port = server.servers[0].sockets[0].getsockname()[1]
        yield f"http://127.0.0.1:{port}"
    finally:
        server.should_exit = True
        thread.join(timeout=10.0)


LIVE_BUDGET = 0.25


@pytest.fixture(scope="module")
def live_base():
    with live_server(default_budget=LIVE_BUDGET) as base:
        yield base


def next_event(lines):
    """Return the next SSE data payload, skipping keepalive comments."""
    data = []
    for line in lines:
        if line.startswith("data:"):
            data.append(line[len("data:"):].strip())
        elif line == "" and data:
            return json.loads("".join(data))
    raise AssertionError("event stream ended unexpectedly")


class TestEventStream:
    def test_stream_updates_and_reply_latency(self, live_base):
        timeout = httpx.Timeout(10.0, read=30.0)
        with httpx.Client(base_url=live_base, timeout=timeout) as rest:
            created = rest.post("/sessions", json={"game": "tictactoe", "seed": 8})
            assert created.status_code == 201
            sid = created.json()["id"]
            with rest.stream("GET", f"/sessions/{sid}/events") as stream:
                assert stream.headers["content-type"].startswith(
                    "text/event-stream")
                lines = stream.iter_lines()
                snapshot = next_event(lines)
                assert snapshot["id"] == sid
                assert snapshot["status"] == AWAITING_HUMAN
                assert snapshot["plies"] == 0

                started = time.perf_counter()
                posted = rest.post(f"/sessions/{sid}/moves",
                                   json={"move": "b2"})
                assert posted.status_code == 200
                event = next_event(lines)
                statuses = [event["status"]]
                while event["status"] != AWAITING_HUMAN:
                    event = next_event(lines)
                    statuses.append(event["status"])
                elapsed = time.perf_counter() - started

                assert AI_THINKING in statuses
                assert event["plies"] == 2
                assert len(event["history"]) == 2
                grace = LIVE_BUDGET * 1.5 + 2.0
                assert elapsed <= grace, (
                    f"AI reply took {elapsed:.2f}s, over {grace:.2f}s")

    def test_stream_closes_when_game_finishes(self, live_base):
        timeout = httpx.Timeout(10.0, read=30.0)
        with httpx.Client(base_url=live_base, timeout=timeout) as rest:
            created = rest.post(
                "/sessions",
                json={"game": "tictactoe", "seed": 13, "time_budget": 0.05})
            assert created.status_code == 201
            payload = created.json()
            sid = payload["id"]
            with rest.stream("GET", f"/sessions/{sid}/events") as stream:
                deadline = time.monotonic() + 60.0
                while payload["status"] != FINISHED:
                    assert time.monotonic() < deadline
                    if payload["status"] == AI_THINKING:
                        time.sleep(0.01)
                        payload = rest.get(f"/sessions/{sid}").json()
                        continue
                    response = rest.post(
                        f"/sessions/{sid}/moves",
                        json={"move": payload["legal_moves"][0]})
                    assert response.status_code == 200
                    payload = response.json()

                events, data = [], []
                for line in stream.iter_lines():
                    if line.startswith("data:"):
                        data.append(line[len("data:"):].strip())
                    elif line == "" and data:
                        events.append(json.loads("".join(data)))
                        data = []
                # The server ends the stream after the final update.
                assert events[-1]["status"] == FINISHED
                assert events[-1]["history"] == payload["history"]
                lengths = [len(event["history"]) for event in events]
                assert lengths == sorted(lengths)
