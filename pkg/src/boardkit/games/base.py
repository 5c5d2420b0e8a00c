"""Shared machinery for the graph games: inserts, steps, alignment wins."""
from __future__ import annotations

from ..core.graph import BoardGraph
from ..core.spec import GameSpec
from ..core.types import EMPTY, GameState, Move, MoveKind, Outcome, PlayerId

RULE_OCCUPIED = "position occupied"
RULE_NOT_YOUR_PIECE = "not your piece"
RULE_NOT_ADJACENT = "not adjacent"
RULE_TARGET_OCCUPIED = "target occupied"
RULE_WRONG_PHASE = "wrong move for this phase"


class GraphGame(GameSpec):
    """Base for games played with inserts and steps on a board graph."""

    def __init__(self, game_id: str, variant_name: str, board: BoardGraph):
        super().__init__(game_id, variant_name, board)
        self._empty = (EMPTY,) * len(board)

    # -- state encoding shared with the compiled kernel -------------------

    def encode_state(self, state: GameState) -> bytes:
        """Board vector for the kernel: occupancy + to_move + aux counter."""
        return bytes(state.occupancy) + bytes((state.to_move.code, self._aux(state)))

    def _aux(self, state: GameState) -> int:
        return 0

    def state_from_vec(self, vec, ply_count: int = 0) -> GameState:
        occ = tuple(int(v) for v in vec[: len(self.board)])
        to_move = PlayerId.from_code(int(vec[len(self.board)]))
        return self._rebuild_state(occ, to_move, int(vec[len(self.board) + 1]), ply_count)

    def _rebuild_state(self, occ, to_move, aux, ply_count) -> GameState:
        return GameState(occ, to_move, self._derive_phase(occ), ply_count)

    def _derive_phase(self, occ) -> str:
        return "main"

    # -- move helpers ------------------------------------------------------

    def _inserts(self, state: GameState) -> list[Move]:
        return [Move.insert(i) for i, c in enumerate(state.occupancy) if c == EMPTY]

    def _steps(self, state: GameState) -> list[Move]:
        me = state.to_move.code
        occ = state.occupancy
        moves = []
        for frm, c in enumerate(occ):
            if c != me:
                continue
            for to in self.board.neighbors[frm]:
                if occ[to] == EMPTY:
                    moves.append(Move.step(frm, to))
        return moves

    def _aligned(self, occ) -> PlayerId | None:
        for line in self.board.lines:
            first = occ[line[0]]
            if first != EMPTY and all(occ[p] == first for p in line[1:]):
                return PlayerId.from_code(first)
        return None

    def _alignment_win(self, state: GameState) -> Outcome | None:
        winner = self._aligned(state.occupancy)
        return Outcome.win(winner) if winner is not None else None

    def _insert_applied(self, state: GameState, pos: int, phase: str | None = None) -> GameState:
        occ = list(state.occupancy)
        occ[pos] = state.to_move.code
        return GameState(tuple(occ), state.to_move.opponent,
                         phase if phase is not None else state.phase,
                         state.ply_count + 1, state.counters)

    def _step_applied(self, state: GameState, frm: int, to: int) -> GameState:
        occ = list(state.occupancy)
        occ[to] = occ[frm]
        occ[frm] = EMPTY
        return GameState(tuple(occ), state.to_move.opponent, state.phase,
                         state.ply_count + 1, state.counters)

    def _explain_step(self, state: GameState, move: Move) -> str | None:
        if move.kind is not MoveKind.STEP:
            return None
        if not (0 <= move.frm < len(self.board)) or state.occupancy[move.frm] != state.to_move.code:
            return RULE_NOT_YOUR_PIECE
        if move.to not in self.board.neighbors[move.frm]:
            return RULE_NOT_ADJACENT
        if state.occupancy[move.to] != EMPTY:
            return RULE_TARGET_OCCUPIED
        return None
