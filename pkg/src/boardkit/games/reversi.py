"""Reversi on the 8x8 board.

Placements must flank at least one line of opponent pieces; flanked pieces
flip. A player with no placement passes; two consecutive passes end the
game early, otherwise it ends when the board is full. More pieces wins.
"""
from __future__ import annotations

from ..core.graph import BoardGraph
from ..core.types import EMPTY, GameState, Move, MoveKind, Outcome, PlayerId, make_counters
from .base import RULE_OCCUPIED, RULE_WRONG_PHASE, GraphGame
from .tables import FAMILY_REVERSI, build_tables

RULE_NO_FLIP = "placement must flank an opponent line"
RULE_BAD_PASS = "pass only when no placement is available"

_DIRS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))
_PREFILL_P1 = ("d5", "e4")
_PREFILL_P2 = ("d4", "e5")


class Reversi(GraphGame):
    def __init__(self, board: BoardGraph, variant_name: str = "default"):
        super().__init__("reversi", variant_name, board)
        at = {board.coords[i]: i for i in range(len(board))}
        rays = []
        for i in range(len(board)):
            x, y = board.coords[i]
            for dx, dy in _DIRS:
                ray, k = [], 1
                while (x + k * dx, y + k * dy) in at:
                    ray.append(at[(x + k * dx, y + k * dy)])
                    k += 1
                rays.append(ray)
        self._rays = rays  # indexed by pos * 8 + direction

    def initial_state(self) -> GameState:
        occ = list(self._empty)
        for pid in _PREFILL_P1:
            occ[self.board.index[pid]] = PlayerId.P1.code
        for pid in _PREFILL_P2:
            occ[self.board.index[pid]] = PlayerId.P2.code
        return GameState(tuple(occ), PlayerId.P1, "main")

    def _aux(self, state):
        return state.counter("pass_streak")

    def _rebuild_state(self, occ, to_move, aux, ply_count):
        counters = make_counters(pass_streak=aux) if aux else ()
        return GameState(occ, to_move, "main", ply_count, counters)

    # -- rules -------------------------------------------------------------

    def _flips(self, occ, pos: int, me: int) -> list[int]:
        """Opponent pieces flipped by ``me`` placing at ``pos`` (may be empty)."""
        opp = 3 - me
        flips = []
        for d in range(8):
            run = []
            for q in self._rays[pos * 8 + d]:
                if occ[q] == opp:
                    run.append(q)
                else:
                    if occ[q] == me and run:
                        flips.extend(run)
                    break
        return flips

    def _generate_moves(self, state):
        me = state.to_move.code
        occ = state.occupancy
        moves = [Move.insert(pos) for pos, c in enumerate(occ)
                 if c == EMPTY and self._flips(occ, pos, me)]
        return moves if moves else [Move.pass_()]

    def win_condition(self, state):
        if EMPTY in state.occupancy and state.counter("pass_streak") < 2:
            return None
        p1, p2 = state.count(1), state.count(2)
        if p1 > p2:
            return Outcome.win(PlayerId.P1)
        if p2 > p1:
            return Outcome.win(PlayerId.P2)
        return Outcome.draw()

    def _apply_move(self, state, move):
        if move.kind is MoveKind.PASS:
            streak = state.counter("pass_streak") + 1
            return GameState(state.occupancy, state.to_move.opponent, state.phase,
                             state.ply_count + 1, make_counters(pass_streak=streak))
        occ = list(state.occupancy)
        me = state.to_move.code
        occ[move.pos] = me
        for q in self._flips(state.occupancy, move.pos, me):
            occ[q] = me
        return GameState(tuple(occ), state.to_move.opponent, state.phase,
                         state.ply_count + 1, ())

    def _explain_illegal(self, state, move):
        if move.kind is MoveKind.PASS:
            return RULE_BAD_PASS
        if move.kind is not MoveKind.INSERT:
            return RULE_WRONG_PHASE
        if not (0 <= move.pos < len(self.board)) or state.occupancy[move.pos] != EMPTY:
            return RULE_OCCUPIED
        return RULE_NO_FLIP

    def kernel_spec(self):
        return build_tables(self, FAMILY_REVERSI, rays=self._rays)
