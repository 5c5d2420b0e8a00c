"""HTTP session service for human-vs-AI play.

Sessions live in memory and expire after inactivity. Each session is a
small state machine (awaiting-human -> ai-thinking -> ... -> finished);
mutations are serialized per session, and the AI reply is computed off
the request path in a worker thread so requests return immediately.
Clients follow the reply by polling GET /sessions/{id} or subscribing to
the GET /sessions/{id}/events stream.
"""
from __future__ import annotations

import asyncio
import json
import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse, StreamingResponse
from pydantic import BaseModel

from .arena import AgentConfig, HybridAgent, build_agent
from .core.notation import NotationError, move_from_text, move_to_text, serialize_state
from .core.spec import GameSpec
from .core.types import ConfigError, GameState, IllegalMoveError, Outcome, PlayerId
from .difficulty import PRESETS, DifficultyParams, preset
from .games import GameId, board_text, new_game, variant_from_string
from .search.config import SearchConfig
from .search.rng import mix64

AWAITING_HUMAN = "awaiting-human"
AI_THINKING = "ai-thinking"
FINISHED = "finished"

DEFAULT_BUDGET = 1.0
DEFAULT_TTL = 3600.0


@dataclass
class Session:
    id: str
    spec: GameSpec
    state: GameState
    human_side: PlayerId
    difficulty: DifficultyParams
    difficulty_name: str | None
    agent: HybridAgent
    time_budget: float
    reveal_evaluations: bool
    status: str = AWAITING_HUMAN
    outcome: Outcome | None = None
    history: list[str] = field(default_factory=list)
    evaluation: dict[str, float] | None = None
    last_active: float = field(default_factory=time.monotonic)
    lock: asyncio.Lock = field(default_factory=asyncio.Lock)
    subscribers: list[asyncio.Queue] = field(default_factory=list)

    def touch(self) -> None:
        self.last_active = time.monotonic()


class CreateSession(BaseModel):
    game: str
    variant: str = "default"
    human_side: str = "P1"
    difficulty: str | dict = "Medium"
    time_budget: float | None = None
    reveal_evaluations: bool = False
    seed: int | None = None


class SubmitMove(BaseModel):
    move: str


def session_payload(session: Session) -> dict:
    spec, state = session.spec, session.state
    legal = [] if session.status != AWAITING_HUMAN else [
        move_to_text(spec, m) for m in spec.legal_moves(state)]
    outcome = None
    if session.outcome is not None:
        outcome = {"winner": None if session.outcome.winner is None
                   else session.outcome.winner.value,
                   "draw": session.outcome.is_draw}
    return {
        "id": session.id,
        "game": spec.game_id,
        "variant": spec.variant_name,
        "status": session.status,
        "state": serialize_state(spec, state),
        "to_move": state.to_move.value,
        "plies": state.ply_count,
        "legal_moves": legal,
        "outcome": outcome,
        "human_side": session.human_side.value,
        "difficulty": {"name": session.difficulty_name,
                       "mu": session.difficulty.mu,
                       "sigma": session.difficulty.sigma},
        "time_budget": session.time_budget,
        "history": list(session.history),
        "evaluation": session.evaluation if session.reveal_evaluations else None,
    }


def create_app(default_budget: float = DEFAULT_BUDGET, session_ttl: float = DEFAULT_TTL,
               log_path: str | None = None) -> FastAPI:
    """Build the service app; parameters configure budget, expiry and logging."""
    app = FastAPI(title="boardkit", version="0.1.0")
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    sessions: dict[str, Session] = {}
    log_lock = threading.Lock()

    def log_session(session: Session) -> None:
        if log_path is None:
            return
        record = {
            "id": session.id,
            "game": session.spec.game_id,
            "variant": session.spec.variant_name,
            "human_side": session.human_side.value,
            "difficulty": {"mu": session.difficulty.mu, "sigma": session.difficulty.sigma},
            "history": list(session.history),
            "outcome": session_payload(session)["outcome"],
        }
        with log_lock:
            with open(log_path, "a", encoding="utf-8") as handle:
                handle.write(json.dumps(record) + "\n")

    def purge_expired() -> None:
        now = time.monotonic()
        for sid in [sid for sid, s in sessions.items()
                    if now - s.last_active > session_ttl]:
            del sessions[sid]

    def get_session(session_id: str) -> Session:
        purge_expired()
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(status_code=404, detail="unknown session")
        session.touch()
        return session

    def notify(session: Session) -> None:
        payload = session_payload(session)
        for queue in list(session.subscribers):
            queue.put_nowait(payload)

    def finish_if_over(session: Session) -> bool:
        spec, state = session.spec, session.state
        if spec.is_terminal(state):
            session.status = FINISHED
            session.outcome = spec.outcome(state)
            log_session(session)
            return True
        return False

    async def ai_turn(session: Session) -> None:
        """Compute and apply the AI reply; runs as a background task."""
        spec = session.spec
        snapshot = session.state
        loop = asyncio.get_running_loop()
        move = await loop.run_in_executor(None, session.agent.choose, spec, snapshot)
        async with session.lock:
            session.state = spec.apply(snapshot, move)
            session.history.append(move_to_text(spec, move))
            evaluation = session.agent.last_evaluation
            if evaluation is not None:
                session.evaluation = {move_to_text(spec, m): round(v, 6)
                                      for m, v in evaluation.values.items()}
            if not finish_if_over(session):
                session.status = AWAITING_HUMAN
            session.touch()
            notify(session)

    def start_ai(session: Session) -> None:
        session.status = AI_THINKING
        asyncio.get_running_loop().create_task(ai_turn(session))

    @app.get("/games")
    def list_games() -> dict:
        games = []
        for game in GameId:
            variants = ["default"]
            try:
                variant_from_string(game, "ludii")
                variants.append("ludii")
            except ConfigError:
                pass
            games.append({"id": game.value, "variants": variants})
        presets = {name: {"mu": p.mu, "sigma": p.sigma} for name, p in PRESETS.items()}
        return {"games": games, "difficulty_presets": presets,
                "default_time_budget": default_budget}

    @app.get("/games/{game_id}/board", response_class=PlainTextResponse)
    def get_board(game_id: str) -> str:
        try:
            return board_text(game_id)
        except ConfigError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from None

    @app.post("/sessions", status_code=201)
    async def create_session(body: CreateSession) -> dict:
        purge_expired()
        try:
            variant = variant_from_string(body.game, body.variant)
            spec = new_game(body.game, variant)
            if isinstance(body.difficulty, str):
                params = preset(body.difficulty)
                name = body.difficulty.capitalize()
            else:
                params = DifficultyParams(**body.difficulty)
                name = None
        except (ConfigError, TypeError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        if body.human_side not in ("P1", "P2"):
            raise HTTPException(status_code=422, detail="human_side must be P1 or P2")
        budget = default_budget if body.time_budget is None else body.time_budget
        if not 0.01 <= budget <= 60.0:
            raise HTTPException(status_code=422,
                                detail="time_budget must be between 0.01 and 60 seconds")
        seed = secrets.randbits(63) if body.seed is None else body.seed
        config = AgentConfig(kind="hybrid",
                             search=SearchConfig(time_budget=budget, rng_seed=seed),
                             difficulty=params)
        agent = build_agent(config)
        agent.begin_match(mix64(seed, 0xAB))
        session = Session(
            id=secrets.token_urlsafe(12),
            spec=spec,
            state=spec.initial_state(),
            human_side=PlayerId(body.human_side),
            difficulty=params,
            difficulty_name=name,
            agent=agent,
            time_budget=budget,
            reveal_evaluations=body.reveal_evaluations,
        )
        sessions[session.id] = session
        if not finish_if_over(session) and session.state.to_move != session.human_side:
            start_ai(session)
        return session_payload(session)

    @app.get("/sessions/{session_id}")
    def get_session_state(session_id: str) -> dict:
        return session_payload(get_session(session_id))

    @app.post("/sessions/{session_id}/moves")
    async def submit_move(session_id: str, body: SubmitMove) -> dict:
        session = get_session(session_id)
        async with session.lock:
            if session.status != AWAITING_HUMAN:
                raise HTTPException(status_code=409,
                                    detail=f"session is {session.status}")
            spec = session.spec
            try:
                move = move_from_text(spec, body.move)
                new_state = spec.apply(session.state, move)
            except NotationError as exc:
                raise HTTPException(status_code=422, detail=str(exc)) from None
            except IllegalMoveError as exc:
                raise HTTPException(status_code=422, detail=exc.rule) from None
            session.state = new_state
            session.history.append(move_to_text(spec, move))
            if not finish_if_over(session):
                start_ai(session)
            session.touch()
            notify(session)
            return session_payload(session)

    @app.get("/sessions/{session_id}/events")
    async def session_events(session_id: str) -> StreamingResponse:
        session = get_session(session_id)
        queue: asyncio.Queue = asyncio.Queue()
        session.subscribers.append(queue)

        def render(payload: dict) -> str:
            return f"event: update\ndata: {json.dumps(payload)}\n\n"

        async def stream():
            try:
                yield render(session_payload(session))
                while True:
                    try:
                        payload = await asyncio.wait_for(queue.get(), timeout=15.0)
                    except asyncio.TimeoutError:
                        yield ": keepalive\n\n"
                        continue
                    yield render(payload)
                    if payload["status"] == FINISHED:
                        return
            finally:
                if queue in session.subscribers:
                    session.subscribers.remove(queue)

        return StreamingResponse(stream(), media_type="text/event-stream")

    return app


def run(host: str = "127.0.0.1", port: int = 8000,
        default_budget: float = DEFAULT_BUDGET, session_ttl: float = DEFAULT_TTL,
        log_path: str | None = None) -> None:
    import uvicorn

    uvicorn.run(create_app(default_budget, session_ttl, log_path),
                host=host, port=port)
