"""Agent-vs-agent series harness with alternating first player.

Builds agents from declarative configs, plays seeded match series and
renders the results either as a win/draw percentage table or as an
append-only JSON record stream for analysis.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

from .core.match import Agent, AgentMoveError, MatchResult, RandomAgent, run_match
from .core.spec import GameSpec
from .core.types import ConfigError, ContractViolation, Outcome, PlayerId
from .difficulty import DifficultyParams, preset, stochastic_select
from .games import new_game, variant_from_string
from .search.config import Evaluation, SearchConfig
from .search.hybrid import iterative_deepening_evaluate
from .search.rng import Splitmix64, mix64
from .search.uct import DEFAULT_C, uct_evaluate

_SELECT_STREAM = 0x5E1EC7


@dataclass(frozen=True)
class AgentConfig:
    """Declarative description of one player.

    ``kind`` picks the evaluator (``hybrid``, ``uct`` or ``random``);
    ``search`` carries its budget and playout knobs (UCT uses the budget,
    playout depth and seed). Without ``difficulty`` the agent plays its
    best move; with it, moves are drawn by the stochastic selection stage.
    """

    kind: str
    search: SearchConfig = SearchConfig()
    uct_c: float = DEFAULT_C
    difficulty: DifficultyParams | None = None
    name: str | None = None

    def __post_init__(self):
        if self.kind not in ("hybrid", "uct", "random"):
            raise ConfigError(f"unknown agent kind: {self.kind!r}")

    @property
    def display_name(self) -> str:
        return self.name if self.name else self.kind


class HybridAgent(Agent):
    """Evaluates with the playout-backed minimax, then selects."""

    def __init__(self, config: AgentConfig):
        self.name = config.display_name
        self._base = config.search
        self._difficulty = config.difficulty
        self._search = config.search
        self._select_rng = random.Random(0)
        self.last_evaluation: Evaluation | None = None

    def begin_match(self, seed: int) -> None:
        self._search = replace(self._base, rng_seed=mix64(self._base.rng_seed, seed))
        self._select_rng = random.Random(mix64(seed, _SELECT_STREAM))

    def choose(self, spec, state):
        evaluation = iterative_deepening_evaluate(spec, state, self._search)
        self.last_evaluation = evaluation
        if self._difficulty is None:
            return evaluation.best_move()
        return stochastic_select(evaluation, self._difficulty, self._select_rng)


class UctAgent(Agent):
    """Evaluates with UCT, plays the most-visited move (or selects)."""

    def __init__(self, config: AgentConfig):
        self.name = config.display_name
        self._config = config
        self._seed = config.search.rng_seed
        self._difficulty = config.difficulty
        self._rng = Splitmix64(self._seed)
        self._select_rng = random.Random(0)
        self.last_evaluation: Evaluation | None = None

    def begin_match(self, seed: int) -> None:
        self._rng = Splitmix64(mix64(self._seed, seed))
        self._select_rng = random.Random(mix64(seed, _SELECT_STREAM))

    def choose(self, spec, state):
        cfg = self._config
        evaluation = uct_evaluate(
            spec, state, budget=cfg.search.time_budget, c=cfg.uct_c,
            max_playout_depth=cfg.search.max_playout_depth, rng=self._rng,
            backend=cfg.search.backend)
        self.last_evaluation = evaluation
        if self._difficulty is not None:
            return stochastic_select(evaluation, self._difficulty, self._select_rng)
        visits = evaluation.visits or {}
        best, best_key = None, None
        for move, value in evaluation.values.items():
            key = (visits.get(move, 0), value)
            if best_key is None or key > best_key:
                best, best_key = move, key
        return best


def build_agent(config: AgentConfig) -> Agent:
    if config.kind == "hybrid":
        return HybridAgent(config)
    if config.kind == "uct":
        return UctAgent(config)
    return RandomAgent(config.search.rng_seed, config.display_name)


@dataclass
class MatchFault:
    """An agent abort: the offending agent forfeits the match."""

    index: int
    agent_name: str
    side: PlayerId
    rule: str


@dataclass
class SeriesResult:
    game_id: str
    variant_name: str
    agent_a: str
    agent_b: str
    n_games: int
    turn_limit: int
    master_seed: int
    wins_a: int = 0
    wins_b: int = 0
    draws: int = 0
    matches: list[MatchResult] = field(default_factory=list)
    first_agent: list[str] = field(default_factory=list)
    faults: list[MatchFault] = field(default_factory=list)

    def percentages(self) -> tuple[float, float, float]:
        n = max(self.n_games, 1)
        return (100.0 * self.wins_a / n, 100.0 * self.wins_b / n,
                100.0 * self.draws / n)


def run_series(
    spec: GameSpec,
    a: AgentConfig,
    b: AgentConfig,
    n_games: int,
    turn_limit: int = 100,
    master_seed: int = 0,
    workers: int = 1,
    on_result=None,
) -> SeriesResult:
    """Play ``n_games`` matches of ``a`` vs ``b``, alternating who starts.

    Agent ``a`` moves first in even-indexed games. Every match gets fresh
    agent instances and an RNG stream keyed by (master_seed, match index,
    side), so results are reproducible and matches can run on a thread
    pool (``workers``) without sharing state.
    """
    if n_games < 1:
        raise ContractViolation("n_games must be >= 1")
    result = SeriesResult(spec.game_id, spec.variant_name,
                          a.display_name, b.display_name,
                          n_games, turn_limit, master_seed)

    def play(index: int):
        a_first = index % 2 == 0
        first, second = (a, b) if a_first else (b, a)
        agent1, agent2 = build_agent(first), build_agent(second)
        seed = mix64(master_seed, index)
        try:
            match = run_match(spec, agent1, agent2, turn_limit, seed)
            fault = None
        except AgentMoveError as exc:
            winner = exc.side.opponent
            match = MatchResult(Outcome.win(winner), 0)
            fault = MatchFault(index, exc.agent_name, exc.side, exc.rule)
        return index, a_first, match, fault

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            played = list(pool.map(play, range(n_games)))
    else:
        played = [play(i) for i in range(n_games)]

    for index, a_first, match, fault in played:
        result.matches.append(match)
        result.first_agent.append(result.agent_a if a_first else result.agent_b)
        if fault is not None:
            result.faults.append(fault)
        winner = match.outcome.winner
        if winner is None:
            result.draws += 1
        elif (winner is PlayerId.P1) == a_first:
            result.wins_a += 1
        else:
            result.wins_b += 1
        if on_result is not None:
            on_result(result, index)
    return result


# -- reporting -------------------------------------------------------------

def _pct(value: float) -> str:
    text = f"{value:.1f}".rstrip("0").rstrip(".")
    return f"{text}%"


def report_table(results: "SeriesResult | list[SeriesResult]") -> str:
    """Win/draw percentage table, one row per series."""
    if isinstance(results, SeriesResult):
        results = [results]
    head_a = results[0].agent_a if results else "a"
    head_b = results[0].agent_b if results else "b"
    rows = [("Game", head_a, head_b, "Draw")]
    for r in results:
        pa, pb, pd = r.percentages()
        game = r.game_id if r.variant_name == "default" else f"{r.game_id}/{r.variant_name}"
        rows.append((game, _pct(pa), _pct(pb), _pct(pd)))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
             for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def match_records(result: SeriesResult) -> list[dict]:
    """One JSON-ready record per match of a series."""
    records = []
    faults = {f.index: f for f in result.faults}
    for i, match in enumerate(result.matches):
        winner = match.outcome.winner
        first = result.first_agent[i]
        second = result.agent_b if first == result.agent_a else result.agent_a
        record = {
            "game": result.game_id,
            "variant": result.variant_name,
            "index": i,
            "first": first,
            "players": {"P1": first, "P2": second},
            "outcome": winner.value if winner else "draw",
            "winner_agent": None,
            "plies": match.plies,
            "turn_limit_draw": match.turn_limit_draw,
            "moves": [rec.move_text for rec in match.log],
            "move_times": [round(rec.elapsed, 6) for rec in match.log],
        }
        if winner is not None:
            record["winner_agent"] = first if winner is PlayerId.P1 else second
        if i in faults:
            record["fault"] = {"agent": faults[i].agent_name, "rule": faults[i].rule}
        records.append(record)
    return records


def report_records(result: SeriesResult) -> str:
    """Append-only record stream: one JSON object per line."""
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in match_records(result))


def parse_records(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# -- experiment manifests --------------------------------------------------

def agent_config_from_dict(data: dict) -> AgentConfig:
    """Agent description from a manifest entry."""
    data = dict(data)
    kind = data.pop("kind", None)
    if kind is None:
        raise ConfigError("agent entry needs a 'kind'")
    search_fields = {}
    for key in ("playouts_per_leaf", "max_playout_depth", "time_budget",
                "rng_seed", "max_depth", "backend"):
        if key in data:
            search_fields[key] = data.pop(key)
    difficulty = data.pop("difficulty", None)
    if isinstance(difficulty, str):
        difficulty = preset(difficulty)
    elif isinstance(difficulty, dict):
        difficulty = DifficultyParams(**difficulty)
    uct_c = data.pop("uct_c", DEFAULT_C)
    name = data.pop("name", None)
    if data:
        raise ConfigError(f"unknown agent fields: {sorted(data)}")
    return AgentConfig(kind=kind, search=SearchConfig(**search_fields),
                       uct_c=uct_c, difficulty=difficulty, name=name)


@dataclass
class Manifest:
    spec: GameSpec
    agent_a: AgentConfig
    agent_b: AgentConfig
    n_games: int
    turn_limit: int
    seed: int


def load_manifest(text: str) -> Manifest:
    """Parse an experiment manifest (a JSON object).

    Keys: ``game``, optional ``variant`` (name or field mapping),
    ``agents`` (list of two agent objects), optional ``n_games`` (20),
    ``turn_limit`` (100) and ``seed`` (0).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"manifest is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("manifest must be a JSON object")
    unknown = set(data) - {"game", "variant", "agents", "n_games", "turn_limit", "seed"}
    if unknown:
        raise ConfigError(f"unknown manifest fields: {sorted(unknown)}")
    if "game" not in data:
        raise ConfigError("manifest needs a 'game'")
    agents = data.get("agents")
    if not isinstance(agents, list) or len(agents) != 2:
        raise ConfigError("manifest needs an 'agents' list with two entries")
    variant = data.get("variant", "default")
    if isinstance(variant, str):
        variant = variant_from_string(data["game"], variant)
    elif isinstance(variant, dict):
        from .games import RuleVariant

        variant = RuleVariant(**variant)
    spec = new_game(data["game"], variant)
    return Manifest(
        spec=spec,
        agent_a=agent_config_from_dict(agents[0]),
        agent_b=agent_config_from_dict(agents[1]),
        n_games=int(data.get("n_games", 20)),
        turn_limit=int(data.get("turn_limit", 100)),
        seed=int(data.get("seed", 0)),
    )
