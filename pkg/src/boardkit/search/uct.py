"""UCT baseline: Monte Carlo tree search with UCB1 node selection.

Used as the reference opponent in experiments. It shares the random
playout (same depth cap and 0.5 cutoff reward) with the playout-backed
minimax so comparisons isolate the tree policy.
"""
from __future__ import annotations

import math
import time

from ..core.spec import GameSpec
from ..core.types import ContractViolation, GameState, PlayerId
from .backend import kernel_for
from .config import Evaluation
from .hybrid import random_playout
from .rng import Splitmix64

DEFAULT_C = math.sqrt(2.0)


def ucb1(child_reward_mean: float, child_visits: int, parent_visits: int,
         c: float = DEFAULT_C) -> float:
    """UCB1 priority: mean reward plus the exploration bonus.

    Zero child visits rank above everything (unvisited-first rule).
    """
    if child_visits == 0:
        return math.inf
    return child_reward_mean + c * math.sqrt(math.log(parent_visits) / child_visits)


class _Node:
    """Tree node; ``reward`` totals are for the player who moved into it."""

    __slots__ = ("state", "moves", "children", "visits", "reward")

    def __init__(self, state: GameState):
        self.state = state
        self.moves = None        # None until first expanded; [] when terminal
        self.children = []       # parallel prefix of moves, canonical order
        self.visits = 0
        self.reward = 0.0

    def mean(self) -> float:
        return self.reward / self.visits if self.visits else 0.5


def uct_evaluate(spec: GameSpec, state: GameState, budget: float,
                 c: float = DEFAULT_C, max_playout_depth: int = 100,
                 rng: Splitmix64 | None = None, clock=time.perf_counter,
                 backend: str | None = None) -> Evaluation:
    """Run select/expand/simulate/backpropagate cycles until the budget ends.

    Returns the mean reward of every root move from the root mover's
    perspective; root moves never visited report 0.5. At least one
    simulation always runs, even with a zero budget.
    """
    if spec.is_terminal(state):
        raise ContractViolation("cannot evaluate a terminal state")
    if rng is None:
        rng = Splitmix64(0)
    kernel = kernel_for(spec, backend)
    root = _Node(state)
    start = clock()
    sims = 0
    while sims == 0 or clock() - start < budget:
        _simulate(spec, root, c, max_playout_depth, rng, kernel)
        sims += 1

    values = {}
    visits = {}
    for i, move in enumerate(root.moves):
        child = root.children[i] if i < len(root.children) else None
        values[move] = child.mean() if child is not None and child.visits else 0.5
        visits[move] = child.visits if child is not None else 0
    return Evaluation(values, completed_depth=0, depth_times=(),
                      simulations=sims, visits=visits)


def _simulate(spec, root, c, max_playout_depth, rng, kernel) -> None:
    """One cycle; every node on the walked path gains one visit."""
    path = [root]
    node = root
    while True:
        if node.moves is None:
            node.moves = [] if spec.is_terminal(node.state) else spec.legal_moves(node.state)
        if not node.moves:
            # terminal leaf: reward for the player who moved into it
            reward = spec.terminal_value(node.state, node.state.to_move.opponent)
            break
        if len(node.children) < len(node.moves):
            move = node.moves[len(node.children)]
            child = _Node(spec.apply_unchecked(node.state, move))
            node.children.append(child)
            path.append(child)
            perspective = node.state.to_move  # the player who just moved
            if kernel is not None:
                reward, rng.state = kernel.playout(
                    spec.encode_state(child.state), max_playout_depth,
                    perspective.code, rng.state)
            else:
                reward = random_playout(spec, child.state, max_playout_depth,
                                        perspective, rng)
            break
        # fully expanded: descend along the best UCB1 child (ties -> first)
        log_n = math.log(node.visits)
        best, best_p = None, -math.inf
        for child in node.children:
            p = child.reward / child.visits + c * math.sqrt(log_n / child.visits)
            if p > best_p:
                best, best_p = child, p
        node = best
        path.append(node)

    for node in reversed(path):
        node.visits += 1
        node.reward += reward
        reward = 1.0 - reward
