"""Search configuration and evaluation results."""
from __future__ import annotations

from dataclasses import dataclass

from ..core.types import ConfigError, Move


@dataclass(frozen=True)
class SearchConfig:
    """Knobs of the playout-backed minimax evaluation.

    ``playouts_per_leaf`` is the number of random playouts averaged at each
    depth-0 leaf; ``max_playout_depth`` caps playout length in plies. The
    optional ``max_depth`` bounds iterative deepening (mostly for tests);
    ``backend`` forces ``compiled`` or ``pure`` instead of autodetection.
    """

    playouts_per_leaf: int = 15
    max_playout_depth: int = 100
    time_budget: float = 5.0
    rng_seed: int = 0
    max_depth: int | None = None
    backend: str | None = None

    def __post_init__(self):
        if self.playouts_per_leaf < 1:
            raise ConfigError("playouts_per_leaf must be >= 1")
        if self.max_playout_depth < 1:
            raise ConfigError("max_playout_depth must be >= 1")
        if self.time_budget < 0:
            raise ConfigError("time_budget must be >= 0")
        if self.max_depth is not None and self.max_depth < 0:
            raise ConfigError("max_depth must be >= 0")
        if self.backend not in (None, "compiled", "pure"):
            raise ConfigError(f"unknown backend: {self.backend!r}")


@dataclass
class Evaluation:
    """Move values in [0,1] from one evaluation of a state.

    ``values`` has exactly one entry per legal move, in the canonical move
    order. ``completed_depth`` is the deepest fully finished deepening
    iteration (0 for a single depth-0 sweep; UCT reports 0). ``depth_times``
    records the duration of each completed iteration. UCT fills
    ``simulations`` and per-move ``visits``; ``exact`` marks an evaluation
    whose lines all ended in terminal states, making the values exact.
    """

    values: dict[Move, float]
    completed_depth: int = 0
    depth_times: tuple[float, ...] = ()
    simulations: int | None = None
    visits: "dict[Move, int] | None" = None
    exact: bool = False

    def best_move(self) -> Move:
        """The highest-valued move; first in canonical order wins ties."""
        best, best_v = None, -1.0
        for move, v in self.values.items():
            if v > best_v:
                best, best_v = move, v
        if best is None:
            raise ValueError("empty evaluation")
        return best
