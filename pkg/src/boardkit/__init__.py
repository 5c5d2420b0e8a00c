"""boardkit: a general game-playing engine with difficulty control.

Evaluates moves of pluggable board games with a playout-backed minimax
(or a UCT baseline) and picks moves through a difficulty-parameterized
stochastic selection stage. Ships six ready-made games, a match harness,
a CLI and an HTTP play service.
"""
from .core import (
    Agent,
    BoardGraph,
    ConfigError,
    ContractViolation,
    EngineError,
    GameSpec,
    GameState,
    IllegalMoveError,
    Move,
    MoveKind,
    Outcome,
    PlayerId,
    run_match,
)
from .difficulty import PRESETS, DifficultyParams, stochastic_select
from .games import GameId, RuleVariant, new_game
from .search import (
    Evaluation,
    SearchConfig,
    iterative_deepening_evaluate,
    uct_evaluate,
)

__version__ = "0.1.0"

__all__ = [
    "Agent", "BoardGraph", "ConfigError", "ContractViolation", "DifficultyParams",
    "EngineError", "Evaluation", "GameId", "GameSpec", "GameState",
    "IllegalMoveError", "Move", "MoveKind", "Outcome", "PRESETS", "PlayerId",
    "RuleVariant", "SearchConfig", "iterative_deepening_evaluate", "new_game",
    "run_match", "stochastic_select", "uct_evaluate", "__version__",
]
