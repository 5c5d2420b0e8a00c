"""Shared fixtures and helpers for the test suite."""
from __future__ import annotations

import pytest

from boardkit.core.types import PlayerId
from boardkit.games import GameId, new_game, variant_from_string
from boardkit.search.rng import Splitmix64, mix64

ALL_GAMES = list(GameId)

ALL_VARIANTS = [
    (GameId.TICTACTOE, "default"),
    (GameId.TAPATAN, "default"),
    (GameId.TAPATAN, "ludii"),
    (GameId.ALQUERQUE, "default"),
    (GameId.ALQUERQUE, "ludii"),
    (GameId.TSORO_YEMATATU, "default"),
    (GameId.FIVE_FIELD_KONO, "default"),
    (GameId.REVERSI, "default"),
]


def spec_for(game: GameId, variant: str = "default"):
    return new_game(game, variant_from_string(game, variant))


def random_walk(spec, seed: int, plies: int):
    """A reachable state after up to ``plies`` random plies (may be terminal)."""
    state = spec.initial_state()
    rng = Splitmix64(mix64(seed, 0xA11CE))
    for _ in range(plies):
        if spec.is_terminal(state):
            break
        moves = spec.legal_moves(state)
        state = spec.apply_unchecked(state, moves[rng.rand_below(len(moves))])
    return state


def random_nonterminal(spec, seed: int, plies: int):
    """Like random_walk but never terminal (backs off to earlier states)."""
    state = spec.initial_state()
    rng = Splitmix64(mix64(seed, 0xA11CE))
    for _ in range(plies):
        moves = spec.legal_moves(state)
        nxt = spec.apply_unchecked(state, moves[rng.rand_below(len(moves))])
        if spec.is_terminal(nxt):
            return state
        state = nxt
    return state


@pytest.fixture(params=[g.value for g in ALL_GAMES])
def any_game(request):
    return spec_for(GameId(request.param))


@pytest.fixture(params=[f"{g.value}:{v}" for g, v in ALL_VARIANTS])
def any_variant(request):
    game, variant = request.param.split(":")
    return spec_for(GameId(game), variant)


def pids(spec, moves):
    """Human-readable move texts, for assertion messages."""
    from boardkit.core.notation import move_to_text

    return [move_to_text(spec, m) for m in moves]


P1 = PlayerId.P1
P2 = PlayerId.P2
