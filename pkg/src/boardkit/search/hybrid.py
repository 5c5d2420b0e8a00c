"""Playout-backed minimax with alpha-beta pruning under iterative deepening.

The evaluator is depth-limited minimax whose depth-0 leaves are scored by
the mean of ``P`` uniformly random playouts instead of a heuristic, which
keeps it game-agnostic. Iterative deepening re-runs the sweep at growing
depth until the time budget is spent; the next iteration is only started
when a linear extrapolation of the last two iteration times predicts it
will fit, and a partially finished iteration is discarded.

All values lie in [0, 1] and are from the perspective of the root mover:
1 is a win for the player the evaluation is computed for.
"""
from __future__ import annotations

import math
import time

from ..core.notation import state_digest64
from ..core.spec import GameSpec
from ..core.types import ConfigError, ContractViolation, GameState, PlayerId
from .backend import IterationAborted, kernel_for
from .config import Evaluation, SearchConfig
from .rng import Splitmix64, mix64

__all__ = [
    "random_playout",
    "minimax_mcts",
    "iterative_deepening_evaluate",
    "predict_next_iteration_time",
    "evaluation_rng_seed",
]


def random_playout(spec: GameSpec, state: GameState, max_depth: int,
                   perspective: PlayerId, rng: Splitmix64) -> float:
    """Play uniformly random moves; the reward is for ``perspective``.

    Returns the terminal value when the game ends, or 0.5 when
    ``max_depth`` plies pass without reaching a terminal state (a
    truncated playout says nothing about who is winning).
    """
    plies = 0
    while True:
        if spec.is_terminal(state):
            return spec.terminal_value(state, perspective)
        if plies >= max_depth:
            return 0.5
        moves = spec.legal_moves(state)
        state = spec.apply_unchecked(state, moves[rng.rand_below(len(moves))])
        plies += 1


def minimax_mcts(spec: GameSpec, state: GameState, depth: int, alpha: float,
                 beta: float, perspective: PlayerId, config: SearchConfig,
                 rng: Splitmix64, leaf_eval=None, deadline: float | None = None,
                 clock=time.perf_counter) -> float:
    """Depth-limited alpha-beta minimax with playout-valued leaves.

    ``perspective`` is the maximizing player. A state with ``perspective``
    to move is a max node, the opponent's turn is a min node. ``leaf_eval``
    replaces the playout average at depth-0 leaves when given (signature
    ``leaf_eval(spec, state, perspective) -> value``); tests use it to make
    the tree deterministic.
    """
    if not 0.0 <= alpha <= beta <= 1.0:
        raise ContractViolation(f"invalid alpha-beta window ({alpha}, {beta})")
    if depth < 0:
        raise ContractViolation(f"negative search depth {depth}")
    return _minimax(spec, state, depth, alpha, beta, perspective, config, rng,
                    leaf_eval, deadline, clock)


def _minimax(spec, state, depth, alpha, beta, perspective, config, rng,
             leaf_eval, deadline, clock):
    if spec.is_terminal(state):
        return spec.terminal_value(state, perspective)
    if depth == 0:
        if leaf_eval is not None:
            return leaf_eval(spec, state, perspective)
        total = 0.0
        for _ in range(config.playouts_per_leaf):
            if deadline is not None and clock() >= deadline:
                raise IterationAborted
            total += random_playout(spec, state, config.max_playout_depth,
                                    perspective, rng)
        return total / config.playouts_per_leaf
    if deadline is not None and clock() >= deadline:
        raise IterationAborted
    moves = spec.legal_moves(state)
    if state.to_move is perspective:
        u = -math.inf
        for move in moves:
            v = _minimax(spec, spec.apply_unchecked(state, move), depth - 1,
                         alpha, beta, perspective, config, rng,
                         leaf_eval, deadline, clock)
            if v > u:
                u = v
            if u >= beta:
                break
            if u > alpha:
                alpha = u
        return u
    u = math.inf
    for move in moves:
        v = _minimax(spec, spec.apply_unchecked(state, move), depth - 1,
                     alpha, beta, perspective, config, rng,
                     leaf_eval, deadline, clock)
        if v < u:
            u = v
        if u <= alpha:
            break
        if u < beta:
            beta = u
    return u


def predict_next_iteration_time(t_prev: float, t_prev2: float | None = None) -> float:
    """Linear extrapolation from the last two iteration times.

    With a single observation the best guess is that time itself; with
    two, extrapolate the trend but never predict below the last time
    (iterations do not get cheaper with depth).
    """
    if t_prev2 is None:
        return t_prev
    return max(t_prev, 2.0 * t_prev - t_prev2)


def evaluation_rng_seed(spec: GameSpec, state: GameState, config: SearchConfig) -> int:
    """Playout stream seed for one evaluation: config seed + state digest."""
    return mix64(config.rng_seed, state_digest64(spec, state))


def iterative_deepening_evaluate(spec: GameSpec, state: GameState,
                                 config: SearchConfig, clock=time.perf_counter,
                                 leaf_eval=None) -> Evaluation:
    """Evaluate every legal move of ``state`` within the time budget.

    Runs depth-d sweeps for d = 0, 1, 2, ...; each sweep evaluates every
    root move's child at depth d with the full (0, 1) window so no root
    value is pruned away. The depth-0 sweep always completes; deeper
    sweeps start only when predicted to fit the remaining budget and are
    discarded if they overrun it. Deepening also stops once a sweep
    finishes without consuming any randomness: then every line ended in a
    terminal state, the values are exact, and more depth cannot change
    them.
    """
    if spec.is_terminal(state):
        raise ContractViolation("cannot evaluate a terminal state")
    start = clock()
    hard_deadline = start + config.time_budget
    rng = Splitmix64(evaluation_rng_seed(spec, state, config))
    perspective = state.to_move
    moves = spec.legal_moves(state)
    children = [spec.apply_unchecked(state, m) for m in moves]

    kernel = None
    if leaf_eval is None and clock is time.perf_counter:
        kernel = kernel_for(spec, config.backend)
    elif config.backend == "compiled":
        raise ConfigError("compiled backend requires the default clock and no leaf_eval")
    encoded = [spec.encode_state(c) for c in children] if kernel is not None else None

    values: list[float] = []
    completed = 0
    times: list[float] = []
    exact = False
    d = 0
    while True:
        deadline = None if d == 0 else hard_deadline
        state_before = rng.state
        t0 = clock()
        try:
            if kernel is not None:
                limit = -1.0 if deadline is None else deadline - clock()
                got, rng.state = kernel.sweep(
                    encoded, d, perspective.code, config.playouts_per_leaf,
                    config.max_playout_depth, rng.state, limit)
                if got is None:
                    break
                sweep_values = got
            else:
                sweep_values = [
                    _minimax(spec, child, d, 0.0, 1.0, perspective, config,
                             rng, leaf_eval, deadline, clock)
                    for child in children
                ]
        except IterationAborted:
            break
        times.append(clock() - t0)
        values = sweep_values
        completed = d
        if leaf_eval is None and rng.state == state_before:
            # Only the playout evaluator consumes randomness: an untouched
            # stream means every line ended in a terminal state, so the
            # values are exact and deeper sweeps cannot change them. A
            # custom leaf_eval consumes none either, proving nothing.
            exact = True
            break
        if config.max_depth is not None and d >= config.max_depth:
            break
        predicted = predict_next_iteration_time(
            times[-1], times[-2] if len(times) >= 2 else None)
        if (clock() - start) + predicted > config.time_budget:
            break
        d += 1
    return Evaluation(dict(zip(moves, values)), completed, tuple(times), exact=exact)
