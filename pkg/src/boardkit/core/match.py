"""Match runner: alternates two agents with a turn-limit draw rule."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .notation import move_to_text, state_digest
from .spec import GameSpec
from .types import ContractViolation, GameState, IllegalMoveError, Move, Outcome, PlayerId

DEFAULT_TURN_LIMIT = 100


class Agent:
    """A move-producing player. Subclasses implement :meth:`choose`."""

    name: str = "agent"

    def begin_match(self, seed: int) -> None:
        """Reseed agent-owned randomness for a new match."""

    def choose(self, spec: GameSpec, state: GameState) -> Move:
        raise NotImplementedError


class AgentMoveError(Exception):
    """An agent returned an illegal move; the match is aborted."""

    def __init__(self, side: PlayerId, agent_name: str, move: Move, rule: str):
        super().__init__(f"{agent_name} ({side.value}) played an illegal move: {rule}")
        self.side = side
        self.agent_name = agent_name
        self.move = move
        self.rule = rule


@dataclass(frozen=True)
class MoveRecord:
    state_digest: str
    move: Move
    move_text: str
    side: PlayerId
    agent_name: str
    elapsed: float


@dataclass
class MatchResult:
    outcome: Outcome
    plies: int
    log: list[MoveRecord] = field(default_factory=list)
    final_state: GameState | None = None
    turn_limit_draw: bool = False


def run_match(
    spec: GameSpec,
    agent1: Agent,
    agent2: Agent,
    turn_limit: int = DEFAULT_TURN_LIMIT,
    seed: int = 0,
    clock=time.perf_counter,
) -> MatchResult:
    """Play one match; ``agent1`` is P1 and moves first.

    One turn is a move by each player, so the draw cutoff triggers when
    ``2 * turn_limit`` plies have been played without a terminal state.
    """
    if turn_limit < 1:
        raise ContractViolation("turn_limit must be >= 1")
    from ..search.rng import mix64  # local import to avoid a cycle

    agents = {PlayerId.P1: agent1, PlayerId.P2: agent2}
    agent1.begin_match(mix64(seed, 1))
    agent2.begin_match(mix64(seed, 2))

    state = spec.initial_state()
    log: list[MoveRecord] = []
    max_plies = 2 * turn_limit
    while True:
        if spec.is_terminal(state):
            return MatchResult(spec.outcome(state), len(log), log, state)
        if state.ply_count >= max_plies:
            return MatchResult(Outcome.draw(), len(log), log, state, turn_limit_draw=True)
        side = state.to_move
        agent = agents[side]
        digest = state_digest(spec, state)
        t0 = clock()
        move = agent.choose(spec, state)
        elapsed = clock() - t0
        try:
            next_state = spec.apply(state, move)
        except IllegalMoveError as exc:
            raise AgentMoveError(side, agent.name, move, exc.rule) from exc
        log.append(MoveRecord(digest, move, move_to_text(spec, move), side, agent.name, elapsed))
        state = next_state


class RandomAgent(Agent):
    """Plays uniformly random legal moves."""

    def __init__(self, seed: int = 0, name: str = "random"):
        from ..search.rng import Splitmix64

        self.name = name
        self._seed = seed
        self._rng = Splitmix64(seed)

    def begin_match(self, seed: int) -> None:
        from ..search.rng import Splitmix64, mix64

        self._rng = Splitmix64(mix64(self._seed, seed))

    def choose(self, spec: GameSpec, state: GameState) -> Move:
        moves = spec.legal_moves(state)
        return moves[self._rng.rand_below(len(moves))]
