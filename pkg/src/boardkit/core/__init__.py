"""Game-agnostic engine core: types, boards, rules interface, match runner."""
from .graph import BoardFormatError, BoardGraph
from .match import Agent, AgentMoveError, MatchResult, MoveRecord, RandomAgent, run_match
from .notation import (
    NotationError,
    move_from_text,
    move_to_text,
    parse_state,
    serialize_state,
    state_digest,
    state_digest64,
)
from .spec import GameSpec
from .types import (
    EMPTY,
    ConfigError,
    ContractViolation,
    EngineError,
    GameState,
    IllegalMoveError,
    Move,
    MoveKind,
    Outcome,
    PlayerId,
    make_counters,
)

__all__ = [
    "Agent", "AgentMoveError", "BoardFormatError", "BoardGraph", "ConfigError",
    "ContractViolation", "EMPTY", "EngineError", "GameSpec", "GameState",
    "IllegalMoveError", "MatchResult", "Move", "MoveKind", "MoveRecord",
    "NotationError", "Outcome", "PlayerId", "RandomAgent", "make_counters",
    "move_from_text", "move_to_text", "parse_state", "run_match",
    "serialize_state", "state_digest", "state_digest64",
]
