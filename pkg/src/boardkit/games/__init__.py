"""The six built-in games and their rule variants.

:func:`new_game` is the only constructor the rest of the engine uses; it
pairs a rule set with its board graph loaded from the packaged data files.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from importlib import resources

from ..core.graph import BoardGraph
from ..core.types import ConfigError
from .alignment import Tapatan, TicTacToe, TsoroYematatu
from .alquerque import Alquerque
from .kono import FiveFieldKono
from .reversi import Reversi

__all__ = [
    "GameId", "RuleVariant", "DEFAULT_VARIANT", "new_game",
    "load_board", "board_text", "variant_from_string",
]


class GameId(str, Enum):
    TICTACTOE = "tictactoe"
    TAPATAN = "tapatan"
    ALQUERQUE = "alquerque"
    TSORO_YEMATATU = "tsoro-yematatu"
    FIVE_FIELD_KONO = "five-field-kono"
    REVERSI = "reversi"


_TAPATAN_STARTS = ("prefilled", "empty-with-placement")
_ALQUERQUE_CAPTURES = ("forced-multi", "optional-single")


@dataclass(frozen=True)
class RuleVariant:
    """Per-game rule switches; the defaults are the LoBoGames rules."""

    tapatan_start: str = "prefilled"
    alquerque_captures: str = "forced-multi"

    def __post_init__(self):
        if self.tapatan_start not in _TAPATAN_STARTS:
            raise ConfigError(f"unknown tapatan_start: {self.tapatan_start!r}")
        if self.alquerque_captures not in _ALQUERQUE_CAPTURES:
            raise ConfigError(f"unknown alquerque_captures: {self.alquerque_captures!r}")


DEFAULT_VARIANT = RuleVariant()

_board_cache: dict[str, BoardGraph] = {}


def board_text(game: "GameId | str") -> str:
    """Raw contents of a game's board-graph data file."""
    game = _coerce_game(game)
    path = resources.files(__package__) / "boards" / f"{game.value}.board"
    return path.read_text(encoding="utf-8")


def load_board(game: "GameId | str") -> BoardGraph:
    game = _coerce_game(game)
    if game.value not in _board_cache:
        _board_cache[game.value] = BoardGraph.parse(board_text(game))
    return _board_cache[game.value]


def variant_from_string(game: "GameId | str", name: str) -> RuleVariant:
    """Shortcut names accepted by the command line: ``default`` or ``ludii``."""
    game = _coerce_game(game)
    if name == "default":
        return DEFAULT_VARIANT
    if name == "ludii":
        if game is GameId.TAPATAN:
            return RuleVariant(tapatan_start="empty-with-placement")
        if game is GameId.ALQUERQUE:
            return RuleVariant(alquerque_captures="optional-single")
        raise ConfigError(f"{game.value} has no 'ludii' variant")
    raise ConfigError(f"unknown variant name: {name!r}")


def _coerce_game(game: "GameId | str") -> GameId:
    if isinstance(game, GameId):
        return game
    try:
        return GameId(game)
    except ValueError:
        known = ", ".join(g.value for g in GameId)
        raise ConfigError(f"unknown game {game!r}; valid games: {known}") from None


def _check_variant(game: GameId, variant: RuleVariant) -> None:
    if game is not GameId.TAPATAN and variant.tapatan_start != "prefilled":
        raise ConfigError(f"tapatan_start does not apply to {game.value}")
    if game is not GameId.ALQUERQUE and variant.alquerque_captures != "forced-multi":
        raise ConfigError(f"alquerque_captures does not apply to {game.value}")


def new_game(game: "GameId | str", variant: "RuleVariant | str | None" = None):
    """Build the :class:`~boardkit.core.spec.GameSpec` for a game id."""
    game = _coerce_game(game)
    if variant is None:
        variant = DEFAULT_VARIANT
    elif isinstance(variant, str):
        variant = variant_from_string(game, variant)
    _check_variant(game, variant)
    board = load_board(game)
    if game is GameId.TICTACTOE:
        return TicTacToe("tictactoe", "default", board)
    if game is GameId.TAPATAN:
        name = "ludii" if variant.tapatan_start == "empty-with-placement" else "default"
        return Tapatan(board, name)
    if game is GameId.ALQUERQUE:
        name = "ludii" if variant.alquerque_captures == "optional-single" else "default"
        return Alquerque(board, name)
    if game is GameId.TSORO_YEMATATU:
        return TsoroYematatu(board)
    if game is GameId.FIVE_FIELD_KONO:
        return FiveFieldKono(board)
    return Reversi(board)
