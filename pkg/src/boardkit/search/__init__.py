"""Evaluation engines: playout-backed minimax and the UCT baseline."""
from .backend import IterationAborted, backend_name, compiled_available, kernel_for
from .config import Evaluation, SearchConfig
from .hybrid import (
    evaluation_rng_seed,
    iterative_deepening_evaluate,
    minimax_mcts,
    predict_next_iteration_time,
    random_playout,
)
from .rng import Splitmix64, mix64
from .uct import DEFAULT_C, ucb1, uct_evaluate

__all__ = [
    "DEFAULT_C", "Evaluation", "IterationAborted", "SearchConfig",
    "Splitmix64", "backend_name", "compiled_available", "evaluation_rng_seed",
    "iterative_deepening_evaluate", "kernel_for", "minimax_mcts", "mix64",
    "predict_next_iteration_time", "random_playout", "ucb1", "uct_evaluate",
]
