"""Five Field Kono: diagonal steps, win by filling the opponent's camp."""
from __future__ import annotations

from ..core.graph import BoardGraph
from ..core.types import EMPTY, GameState, MoveKind, Outcome, PlayerId
from .base import RULE_WRONG_PHASE, GraphGame
from .tables import FAMILY_MOVE, build_tables

# Each side: the full back row plus the two flanking cells of the next row.
_P1_CAMP = ("a1", "b1", "c1", "d1", "e1", "a2", "e2")
_P2_CAMP = ("a5", "b5", "c5", "d5", "e5", "a4", "e4")


class FiveFieldKono(GraphGame):
    def __init__(self, board: BoardGraph):
        super().__init__("five-field-kono", "default", board)
        self._camp = {
            PlayerId.P1: tuple(board.index[p] for p in _P1_CAMP),
            PlayerId.P2: tuple(board.index[p] for p in _P2_CAMP),
        }

    def initial_state(self) -> GameState:
        occ = list(self._empty)
        for i in self._camp[PlayerId.P1]:
            occ[i] = PlayerId.P1.code
        for i in self._camp[PlayerId.P2]:
            occ[i] = PlayerId.P2.code
        return GameState(tuple(occ), PlayerId.P1, "movement")

    def _derive_phase(self, occ):
        return "movement"

    def _generate_moves(self, state):
        return self._steps(state)

    def win_condition(self, state):
        # a player wins by occupying every cell of the opposing camp
        for player in (PlayerId.P1, PlayerId.P2):
            goal = self._camp[player.opponent]
            if all(state.occupancy[i] == player.code for i in goal):
                return Outcome.win(player)
        return None

    def _apply_move(self, state, move):
        return self._step_applied(state, move.frm, move.to)

    def _explain_illegal(self, state, move):
        if move.kind is not MoveKind.STEP:
            return RULE_WRONG_PHASE
        return self._explain_step(state, move) or RULE_WRONG_PHASE

    def kernel_spec(self):
        return build_tables(
            self, FAMILY_MOVE,
            targets=(list(self._camp[PlayerId.P2]), list(self._camp[PlayerId.P1])),
        )
