"""Alquerque: steps and jump captures on the 5x5 line board.

Default rules: captures are mandatory when available and a single turn may
chain multiple jumps (a whole chain is one composite move; stopping early
is allowed). The ``ludii`` variant makes captures optional and limits them
to a single jump.
"""
from __future__ import annotations

from ..core.graph import BoardGraph
from ..core.types import EMPTY, GameState, Move, MoveKind, Outcome, PlayerId
from .base import RULE_WRONG_PHASE, GraphGame
from .tables import FAMILY_CAPTURE, MAX_HOPS, build_tables

RULE_CAPTURE_REQUIRED = "required to do a capture"
RULE_BAD_JUMP = "jump must capture an adjacent opponent piece"

_PREFILL_P1 = ("a1", "b1", "c1", "d1", "e1", "a2", "b2", "c2", "d2", "e2", "d3", "e3")
_PREFILL_P2 = ("a5", "b5", "c5", "d5", "e5", "a4", "b4", "c4", "d4", "e4", "a3", "b3")


class Alquerque(GraphGame):
    def __init__(self, board: BoardGraph, variant_name: str = "default"):
        super().__init__("alquerque", variant_name, board)
        self.forced_captures = variant_name != "ludii"
        self.multi_captures = variant_name != "ludii"

    def initial_state(self) -> GameState:
        occ = list(self._empty)
        for pid in _PREFILL_P1:
            occ[self.board.index[pid]] = PlayerId.P1.code
        for pid in _PREFILL_P2:
            occ[self.board.index[pid]] = PlayerId.P2.code
        return GameState(tuple(occ), PlayerId.P1, "movement")

    def _derive_phase(self, occ):
        return "movement"

    # -- move generation ---------------------------------------------------

    def _jump_sequences(self, occ: list[int], frm: int, me: int) -> list[tuple[tuple[int, int], ...]]:
        """All capture chains starting at ``frm``, in canonical order.

        ``occ`` is mutated during the walk and restored before returning.
        Chains are emitted in lexicographic order of their landing squares,
        which matches ``Move.sort_key``.
        """
        opp = 3 - me
        out: list[tuple[tuple[int, int], ...]] = []

        def extend(cur: int, prefix: tuple[tuple[int, int], ...]):
            for over, to in self.board.jumps_from[cur]:
                if occ[over] == opp and occ[to] == EMPTY:
                    hop = prefix + ((over, to),)
                    out.append(hop)
                    if self.multi_captures and len(hop) < MAX_HOPS:
                        occ[cur], occ[over], occ[to] = EMPTY, EMPTY, me
                        extend(to, hop)
                        occ[cur], occ[over], occ[to] = me, opp, EMPTY

        extend(frm, ())
        return out

    def _jumps(self, state: GameState) -> list[Move]:
        me = state.to_move.code
        occ = list(state.occupancy)
        moves = []
        for frm, c in enumerate(state.occupancy):
            if c == me:
                for hops in self._jump_sequences(occ, frm, me):
                    moves.append(Move.jump(frm, hops))
        return moves

    def _generate_moves(self, state):
        jumps = self._jumps(state)
        if self.forced_captures and jumps:
            return self.sorted_moves(jumps)
        return self.sorted_moves(self._steps(state) + jumps)

    def win_condition(self, state):
        occ = state.occupancy
        if PlayerId.P2.code not in occ:
            return Outcome.win(PlayerId.P1)
        if PlayerId.P1.code not in occ:
            return Outcome.win(PlayerId.P2)
        return None

    def _apply_move(self, state, move):
        if move.kind is MoveKind.STEP:
            return self._step_applied(state, move.frm, move.to)
        occ = list(state.occupancy)
        cur = move.frm
        me = occ[cur]
        occ[cur] = EMPTY
        for over, to in move.hops:
            occ[over] = EMPTY
            cur = to
        occ[cur] = me
        return GameState(tuple(occ), state.to_move.opponent, state.phase,
                         state.ply_count + 1, state.counters)

    def _explain_illegal(self, state, move):
        if move.kind is MoveKind.STEP:
            reason = self._explain_step(state, move)
            if reason:
                return reason
            if self.forced_captures and self._jumps(state):
                return RULE_CAPTURE_REQUIRED
            return RULE_WRONG_PHASE
        if move.kind is MoveKind.JUMP:
            return RULE_BAD_JUMP
        return RULE_WRONG_PHASE

    def kernel_spec(self):
        return build_tables(
            self, FAMILY_CAPTURE,
            forced_capture=self.forced_captures,
            multi_capture=self.multi_captures,
        )
