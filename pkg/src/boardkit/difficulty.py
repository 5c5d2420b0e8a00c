"""Difficulty-controlled move selection.

Selection is decoupled from evaluation: given any mapping of moves to
values in [0, 1], a target value is drawn from a Gaussian whose mean and
spread define the difficulty, and the move with the nearest value is
played. Higher means favor stronger moves; the spread keeps play varied.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core.types import ConfigError, ContractViolation, Move
from .search.config import Evaluation

__all__ = [
    "DifficultyParams", "PRESETS", "preset",
    "sample_target", "stochastic_select", "selection_band_probabilities",
]


@dataclass(frozen=True)
class DifficultyParams:
    """Gaussian parameters of the selection target."""

    mu: float
    sigma: float

    def __post_init__(self):
        if not self.sigma > 0:
            raise ConfigError("sigma must be > 0")


PRESETS: dict[str, DifficultyParams] = {
    "Easy": DifficultyParams(0.4, 0.3),
    "Medium": DifficultyParams(0.6, 0.3),
    "Hard": DifficultyParams(1.0, 0.3),
}


def preset(name: str) -> DifficultyParams:
    """Look up a preset by its canonical name (case-insensitive)."""
    try:
        return PRESETS[name.capitalize()]
    except KeyError:
        known = "/".join(PRESETS)
        raise ConfigError(f"unknown difficulty preset {name!r}; choose one of {known}") from None


def sample_target(params: DifficultyParams, rng) -> float:
    """One Gaussian draw clamped into [0, 1].

    ``rng`` is any object with a ``gauss(mu, sigma)`` method, e.g.
    :class:`random.Random`.
    """
    raw = rng.gauss(params.mu, params.sigma)
    return min(1.0, max(0.0, raw))


def stochastic_select(evaluation: Evaluation, params: DifficultyParams, rng) -> Move:
    """The move whose value lies nearest a sampled target.

    The scan uses a strict ``<`` comparison, so among equally near moves
    the first in the evaluation's stable order is kept.
    """
    if not evaluation.values:
        raise ContractViolation("cannot select from an empty evaluation")
    target = sample_target(params, rng)
    selected = None
    difference = math.inf
    for move, value in evaluation.values.items():
        if abs(value - target) < difference:
            selected = move
            difference = abs(value - target)
    return selected


def _phi(x: float) -> float:
    """Standard normal CDF."""
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))


def selection_band_probabilities(params: DifficultyParams) -> tuple[float, float, float]:
    """(P(X < 0.25), P(0.25 <= X <= 0.75), P(X > 0.75)) for X ~ N(mu, sigma).

    Band masses of the raw Gaussian; clipping moves tail mass to exactly
    0 and 1, which stay inside the outer bands, so the three masses are
    unaffected by it.
    """
    low = _phi((0.25 - params.mu) / params.sigma)
    high = 1.0 - _phi((0.75 - params.mu) / params.sigma)
    return (low, 1.0 - low - high, high)
