"""Timing comparison between the compiled kernel and the pure-Python path.

Measures raw playout throughput and full evaluations per game so the
speedup of the compiled backend is visible at a glance. Used by the
``bench`` CLI subcommand.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .games import GameId, new_game
from .search.backend import compiled_available, kernel_for
from .search.config import SearchConfig
from .search.hybrid import iterative_deepening_evaluate, random_playout
from .search.rng import Splitmix64


@dataclass(frozen=True)
class BenchRow:
    game: str
    pure_playouts_per_s: float
    compiled_playouts_per_s: float | None
    pure_depth: int
    compiled_depth: int | None

    @property
    def playout_speedup(self) -> float | None:
        if self.compiled_playouts_per_s is None:
            return None
        return self.compiled_playouts_per_s / self.pure_playouts_per_s


def _time_playouts_pure(spec, seconds: float, max_depth: int) -> float:
    state = spec.initial_state()
    rng = Splitmix64(1)
    n = 0
    start = time.perf_counter()
    while time.perf_counter() - start < seconds:
        random_playout(spec, state, max_depth, state.to_move, rng)
        n += 1
    return n / (time.perf_counter() - start)


def _time_playouts_compiled(spec, seconds: float, max_depth: int) -> float:
    kernel = kernel_for(spec)
    vec = spec.encode_state(spec.initial_state())
    persp = spec.initial_state().to_move.code
    rng_state = Splitmix64(1).state
    n = 0
    start = time.perf_counter()
    while time.perf_counter() - start < seconds:
        for _ in range(100):
            _, rng_state = kernel.playout(vec, max_depth, persp, rng_state)
        n += 100
    return n / (time.perf_counter() - start)


def _depth_reached(spec, budget: float, backend: str) -> int:
    config = SearchConfig(time_budget=budget, rng_seed=11, backend=backend)
    return iterative_deepening_evaluate(spec, spec.initial_state(), config).completed_depth


def run_benchmark(seconds: float = 0.4, budget: float = 0.5,
                  games: list[GameId] | None = None) -> list[BenchRow]:
    """Benchmark every game; ``seconds`` per playout timing, ``budget`` per search."""
    rows = []
    for game in games or list(GameId):
        spec = new_game(game)
        pure_rate = _time_playouts_pure(spec, seconds, 100)
        if compiled_available():
            compiled_rate = _time_playouts_compiled(spec, seconds, 100)
            compiled_depth = _depth_reached(spec, budget, "compiled")
        else:
            compiled_rate = None
            compiled_depth = None
        pure_depth = _depth_reached(spec, budget, "pure")
        rows.append(BenchRow(game.value, pure_rate, compiled_rate,
                             pure_depth, compiled_depth))
    return rows


def format_benchmark(rows: list[BenchRow]) -> str:
    header = (f"{'game':<16} {'pure po/s':>12} {'compiled po/s':>14} "
              f"{'speedup':>8} {'pure depth':>11} {'compiled depth':>15}")
    lines = [header, "-" * len(header)]
    for row in rows:
        compiled_rate = ("-" if row.compiled_playouts_per_s is None
                         else f"{row.compiled_playouts_per_s:,.0f}")
        speedup = "-" if row.playout_speedup is None else f"{row.playout_speedup:.0f}x"
        compiled_depth = "-" if row.compiled_depth is None else str(row.compiled_depth)
        lines.append(f"{row.game:<16} {row.pure_playouts_per_s:>12,.0f} "
                     f"{compiled_rate:>14} {speedup:>8} {row.pure_depth:>11} "
                     f"{compiled_depth:>15}")
    return "\n".join(lines)
