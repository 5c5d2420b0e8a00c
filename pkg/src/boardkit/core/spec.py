"""Game-agnostic forward-model interface.

A :class:`GameSpec` is everything the engine knows about a game: initial
state, legal-move generation, transitions, terminal test and terminal
values. Specs are immutable and safe to share; all rule methods are pure.
"""
from __future__ import annotations

from abc import ABC, abstractmethod

from .graph import BoardGraph
from .types import ContractViolation, GameState, IllegalMoveError, Move, Outcome, PlayerId

RULE_GAME_OVER = "game is over"
RULE_ILLEGAL = "illegal move"


class GameSpec(ABC):
    """Forward model of one game (with a fixed rule variant)."""

    game_id: str
    variant_name: str
    board: BoardGraph

    def __init__(self, game_id: str, variant_name: str, board: BoardGraph):
        self.game_id = game_id
        self.variant_name = variant_name
        self.board = board

    # -- game-specific hooks ---------------------------------------------

    @abstractmethod
    def initial_state(self) -> GameState:
        ...

    @abstractmethod
    def _generate_moves(self, state: GameState) -> list[Move]:
        """All moves of the player to move, in canonical sorted order.

        May be empty (a stuck player); stuckness is resolved by
        :meth:`outcome`, not here.
        """

    @abstractmethod
    def win_condition(self, state: GameState) -> Outcome | None:
        """Outcome if a goal of the game is met in ``state``, else None."""

    @abstractmethod
    def _apply_move(self, state: GameState, move: Move) -> GameState:
        """Transition for a move known to be legal in ``state``."""

    def _stuck_outcome(self, state: GameState) -> Outcome:
        """Result when the player to move has no legal move (default: loss)."""
        return Outcome.win(state.to_move.opponent)

    def _explain_illegal(self, state: GameState, move: Move) -> str:
        return RULE_ILLEGAL

    def _has_moves(self, state: GameState) -> bool:
        return bool(self._generate_moves(state))

    # -- engine surface ---------------------------------------------------

    def legal_moves(self, state: GameState) -> list[Move]:
        if self.is_terminal(state):
            raise ContractViolation("legal_moves called on a terminal state")
        return self._generate_moves(state)

    def apply(self, state: GameState, move: Move) -> GameState:
        if self.is_terminal(state):
            raise IllegalMoveError(RULE_GAME_OVER)
        if move not in self._generate_moves(state):
            raise IllegalMoveError(self._explain_illegal(state, move))
        return self._apply_move(state, move)

    def apply_unchecked(self, state: GameState, move: Move) -> GameState:
        """Fast-path transition; ``move`` must come from :meth:`legal_moves`."""
        return self._apply_move(state, move)

    def is_terminal(self, state: GameState) -> bool:
        return self.win_condition(state) is not None or not self._has_moves(state)

    def outcome(self, state: GameState) -> Outcome:
        won = self.win_condition(state)
        if won is not None:
            return won
        if not self._has_moves(state):
            return self._stuck_outcome(state)
        raise ContractViolation("outcome called on a non-terminal state")

    def terminal_value(self, state: GameState, perspective: PlayerId) -> float:
        return self.outcome(state).value_for(perspective)

    # -- helpers ----------------------------------------------------------

    def sorted_moves(self, moves: list[Move]) -> list[Move]:
        moves.sort(key=Move.sort_key)
        return moves

    def kernel_spec(self):
        """Rule tables for the compiled kernel; None if not supported."""
        return None

    def __repr__(self) -> str:
        return f"<GameSpec {self.game_id}/{self.variant_name}>"
