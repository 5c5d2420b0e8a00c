"""Shared value types: players, moves, outcomes and immutable game states."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum


class EngineError(Exception):
    """Base class for engine errors."""


class ContractViolation(EngineError):
    """An operation was called outside of its stated preconditions."""


class IllegalMoveError(EngineError):
    """A move was rejected; ``rule`` names the violated rule."""

    def __init__(self, rule: str):
        super().__init__(rule)
        self.rule = rule


class ConfigError(EngineError):
    """Invalid game/variant/agent configuration."""


class PlayerId(str, Enum):
    P1 = "P1"
    P2 = "P2"

    @property
    def opponent(self) -> "PlayerId":
        return PlayerId.P2 if self is PlayerId.P1 else PlayerId.P1

    @property
    def code(self) -> int:
        """Occupancy code: 1 for P1, 2 for P2 (0 means empty)."""
        return 1 if self is PlayerId.P1 else 2

    @staticmethod
    def from_code(code: int) -> "PlayerId":
        if code == 1:
            return PlayerId.P1
        if code == 2:
            return PlayerId.P2
        raise ValueError(f"not a player code: {code}")


EMPTY = 0


class MoveKind(IntEnum):
    """Move kinds; the numeric value is the primary sort rank."""

    INSERT = 0
    STEP = 1
    JUMP = 2
    PASS = 3


@dataclass(frozen=True)
class Move:
    """A move, positions given as board-graph position indices.

    * insert: ``pos`` is the target cell
    * step: ``frm`` -> ``to`` along a board edge
    * jump: starts at ``frm``; ``hops`` is a non-empty sequence of
      ``(over, to)`` pairs, each capturing the piece on ``over``
    * pass: no fields
    """

    kind: MoveKind
    pos: int = -1
    frm: int = -1
    to: int = -1
    hops: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def insert(pos: int) -> "Move":
        return Move(MoveKind.INSERT, pos=pos)

    @staticmethod
    def step(frm: int, to: int) -> "Move":
        return Move(MoveKind.STEP, frm=frm, to=to)

    @staticmethod
    def jump(frm: int, hops: tuple[tuple[int, int], ...]) -> "Move":
        if not hops:
            raise ValueError("jump requires at least one hop")
        return Move(MoveKind.JUMP, frm=frm, hops=tuple(hops))

    @staticmethod
    def pass_() -> "Move":
        return Move(MoveKind.PASS)

    @property
    def landing(self) -> int:
        """Final position of the moving piece (insert target for inserts)."""
        if self.kind is MoveKind.INSERT:
            return self.pos
        if self.kind is MoveKind.STEP:
            return self.to
        if self.kind is MoveKind.JUMP:
            return self.hops[-1][1]
        return -1

    def sort_key(self) -> tuple:
        if self.kind is MoveKind.INSERT:
            return (0, self.pos, -1, ())
        if self.kind is MoveKind.STEP:
            return (1, self.frm, self.to, ())
        if self.kind is MoveKind.JUMP:
            return (2, self.frm, -1, tuple(to for _, to in self.hops))
        return (3, -1, -1, ())


@dataclass(frozen=True)
class Outcome:
    """Result of a finished game: a win for one player, or a draw."""

    winner: PlayerId | None

    @staticmethod
    def win(player: PlayerId) -> "Outcome":
        return Outcome(player)

    @staticmethod
    def draw() -> "Outcome":
        return Outcome(None)

    @property
    def is_draw(self) -> bool:
        return self.winner is None

    def value_for(self, perspective: PlayerId) -> float:
        if self.winner is None:
            return 0.5
        return 1.0 if self.winner is perspective else 0.0


@dataclass(frozen=True)
class GameState:
    """Immutable position snapshot.

    ``occupancy`` is indexed by board-graph position index and holds cell
    codes (0 empty, 1 P1, 2 P2). ``counters`` carries game-specific state
    that cannot be derived from the board (e.g. Reversi's pass streak),
    stored sorted by name so equal states compare equal.
    """

    occupancy: tuple[int, ...]
    to_move: PlayerId
    phase: str
    ply_count: int = 0
    counters: tuple[tuple[str, int], ...] = ()

    def piece_at(self, index: int) -> int:
        return self.occupancy[index]

    def counter(self, name: str, default: int = 0) -> int:
        for key, value in self.counters:
            if key == name:
                return value
        return default

    def count(self, code: int) -> int:
        return self.occupancy.count(code)


def make_counters(**values: int) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(values.items()))
