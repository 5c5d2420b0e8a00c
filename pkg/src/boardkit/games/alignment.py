"""Alignment games: tic-tac-toe, Tapatan and Tsoro Yematatu."""
from __future__ import annotations

from ..core.graph import BoardGraph
from ..core.types import EMPTY, GameState, Move, MoveKind, Outcome, PlayerId
from .base import (
    RULE_OCCUPIED,
    RULE_WRONG_PHASE,
    GraphGame,
)
from .tables import FAMILY_INSERT, FAMILY_MOVE, build_tables

PHASE_PLACEMENT = "placement"
PHASE_MOVEMENT = "movement"


class TicTacToe(GraphGame):
    """Pure insertion on a 3x3 board; three in a line wins, full board draws."""

    def initial_state(self) -> GameState:
        return GameState(self._empty, PlayerId.P1, "main")

    def _generate_moves(self, state):
        return self._inserts(state)

    def win_condition(self, state):
        return self._alignment_win(state)

    def _stuck_outcome(self, state):
        return Outcome.draw()

    def _apply_move(self, state, move):
        return self._insert_applied(state, move.pos)

    def _explain_illegal(self, state, move):
        if move.kind is not MoveKind.INSERT:
            return "only insertions allowed"
        return RULE_OCCUPIED

    def kernel_spec(self):
        return build_tables(self, FAMILY_INSERT, stuck_draw=True)


class PlaceThenMoveGame(GraphGame):
    """Each player places ``quota`` pieces, then pieces step along edges.

    A quota of zero means the game starts in the movement phase from a
    prefilled position. A stuck player loses.
    """

    quota: int = 0
    prefill: dict[str, PlayerId] = {}

    def initial_state(self) -> GameState:
        if self.quota == 0:
            occ = list(self._empty)
            for pid, player in self.prefill.items():
                occ[self.board.index[pid]] = player.code
            return GameState(tuple(occ), PlayerId.P1, PHASE_MOVEMENT)
        return GameState(self._empty, PlayerId.P1, PHASE_PLACEMENT)

    def _in_placement(self, state) -> bool:
        return state.phase == PHASE_PLACEMENT

    def _derive_phase(self, occ):
        if self.quota and (len(occ) - occ.count(EMPTY)) < 2 * self.quota:
            return PHASE_PLACEMENT
        return PHASE_MOVEMENT

    def _generate_moves(self, state):
        if self._in_placement(state):
            return self._inserts(state)
        return self._steps(state)

    def win_condition(self, state):
        return self._alignment_win(state)

    def _apply_move(self, state, move):
        if move.kind is MoveKind.INSERT:
            placed = len(state.occupancy) - state.occupancy.count(EMPTY) + 1
            phase = PHASE_MOVEMENT if placed >= 2 * self.quota else PHASE_PLACEMENT
            return self._insert_applied(state, move.pos, phase)
        return self._step_applied(state, move.frm, move.to)

    def _explain_illegal(self, state, move):
        placing = self._in_placement(state)
        if placing and move.kind is not MoveKind.INSERT:
            return RULE_WRONG_PHASE
        if not placing and move.kind is not MoveKind.STEP:
            return RULE_WRONG_PHASE
        if move.kind is MoveKind.INSERT:
            return RULE_OCCUPIED
        return self._explain_step(state, move) or RULE_WRONG_PHASE

    def kernel_spec(self):
        return build_tables(self, FAMILY_MOVE, quota=self.quota)


class Tapatan(PlaceThenMoveGame):
    """Three pieces each on the 3x3 line board; align three to win.

    The default start has all six pieces on the board in the traditional
    alternating rows; the ``ludii`` variant starts empty with three
    placements per player.
    """

    prefill = {
        "a1": PlayerId.P1, "b1": PlayerId.P2, "c1": PlayerId.P1,
        "a3": PlayerId.P2, "b3": PlayerId.P1, "c3": PlayerId.P2,
    }

    def __init__(self, board: BoardGraph, variant_name: str = "default"):
        super().__init__("tapatan", variant_name, board)
        self.quota = 3 if variant_name == "ludii" else 0


class TsoroYematatu(PlaceThenMoveGame):
    """Four placements each on the 5x5 line board, then steps; align four."""

    quota = 4

    def __init__(self, board: BoardGraph):
        super().__init__("tsoro-yematatu", "default", board)
