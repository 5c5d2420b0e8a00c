"""Command-line entry points: arena, eval, play, serve and bench."""
from __future__ import annotations

import argparse
import sys

from .arena import (AgentConfig, build_agent, load_manifest, report_records,
                    report_table, run_series)
from .core.notation import NotationError, move_from_text, move_to_text, parse_state
from .core.types import ConfigError, EngineError, IllegalMoveError, PlayerId
from .difficulty import PRESETS, preset
from .games import GameId, new_game, variant_from_string
from .search.backend import backend_name
from .search.config import SearchConfig
from .search.hybrid import iterative_deepening_evaluate
from .search.rng import mix64


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boardkit",
                                     description="Board-game engine with a "
                                     "hybrid minimax-playout search.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_game_args(p):
        p.add_argument("--game", required=True, help="game id, e.g. tictactoe")
        p.add_argument("--variant", default="default",
                       help="rule variant name (default or ludii)")

    arena = sub.add_parser("arena", help="run an agent-vs-agent series")
    arena.add_argument("--manifest", help="JSON manifest path (overrides flags)")
    arena.add_argument("--game", help="game id")
    arena.add_argument("--variant", default="default")
    arena.add_argument("--a", default="hybrid", dest="agent_a",
                       help="first agent: hybrid, uct or random")
    arena.add_argument("--b", default="uct", dest="agent_b",
                       help="second agent: hybrid, uct or random")
    arena.add_argument("--games", type=int, default=20)
    arena.add_argument("--time-ms", type=int, default=1000,
                       help="per-move search budget in milliseconds")
    arena.add_argument("--playouts", type=int, default=15,
                       help="playouts per leaf for the hybrid agent")
    arena.add_argument("--seed", type=int, default=0)
    arena.add_argument("--turn-limit", type=int, default=100)
    arena.add_argument("--workers", type=int, default=1)
    arena.add_argument("--difficulty-a", help="difficulty preset for agent a")
    arena.add_argument("--difficulty-b", help="difficulty preset for agent b")
    arena.add_argument("--report", help="also write the report table to this file")
    arena.add_argument("--records", help="write per-match JSON records to this file")
    arena.add_argument("--quiet", action="store_true", help="suppress progress output")

    ev = sub.add_parser("eval", help="evaluate every legal move of a position")
    add_game_args(ev)
    ev.add_argument("--state", help="state file in canonical notation "
                    "('-' for stdin; omitted: initial position)")
    ev.add_argument("--time", type=float, default=1.0, help="budget in seconds")
    ev.add_argument("--playouts", type=int, default=15)
    ev.add_argument("--depth", type=int, help="fixed depth cap")
    ev.add_argument("--seed", type=int, default=0)
    ev.add_argument("--backend", choices=["compiled", "pure"])

    play = sub.add_parser("play", help="play against the engine in the terminal")
    add_game_args(play)
    play.add_argument("--difficulty", default="Medium",
                      help="preset: " + "/".join(PRESETS))
    play.add_argument("--side", choices=["P1", "P2"], default="P1")
    play.add_argument("--time", type=float, default=1.0)
    play.add_argument("--seed", type=int, default=0)

    serve = sub.add_parser("serve", help="run the HTTP session service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--budget", type=float, default=1.0,
                       help="default per-move budget in seconds")
    serve.add_argument("--ttl", type=float, default=3600.0,
                       help="session expiry after inactivity, seconds")
    serve.add_argument("--log", help="append finished-session records here")

    bench = sub.add_parser("bench", help="compare compiled and pure backends")
    bench.add_argument("--seconds", type=float, default=0.4,
                       help="sampling time per playout measurement")
    bench.add_argument("--budget", type=float, default=0.5,
                       help="search budget per depth measurement")
    bench.add_argument("--game", action="append",
                       help="restrict to this game (repeatable)")
    return parser


def _agent_config(kind: str, args, difficulty_name: str | None) -> AgentConfig:
    if kind not in ("hybrid", "uct", "random"):
        raise ConfigError(f"unknown agent {kind!r}; valid agents: hybrid, uct, random")
    difficulty = preset(difficulty_name) if difficulty_name else None
    search = SearchConfig(time_budget=args.time_ms / 1000.0,
                          playouts_per_leaf=args.playouts,
                          rng_seed=args.seed)
    return AgentConfig(kind=kind, search=search, difficulty=difficulty)


def _cmd_arena(args) -> int:
    if args.manifest:
        with open(args.manifest, encoding="utf-8") as handle:
            manifest = load_manifest(handle.read())
        spec, a, b = manifest.spec, manifest.agent_a, manifest.agent_b
        n_games, turn_limit, seed = manifest.n_games, manifest.turn_limit, manifest.seed
    else:
        if not args.game:
            print("arena needs --game or --manifest", file=sys.stderr)
            return 2
        spec = new_game(args.game, variant_from_string(args.game, args.variant))
        a = _agent_config(args.agent_a, args, args.difficulty_a)
        b = _agent_config(args.agent_b, args, args.difficulty_b)
        n_games, turn_limit, seed = args.games, args.turn_limit, args.seed

    done = 0

    def progress(match_result, index):
        nonlocal done
        done += 1
        if not args.quiet:
            print(f"match {done}/{n_games} finished", file=sys.stderr)

    result = run_series(spec, a, b, n_games, turn_limit=turn_limit,
                        master_seed=seed, workers=args.workers,
                        on_result=progress)
    table = report_table(result)
    print(table)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(table + "\n")
    if args.records:
        with open(args.records, "w", encoding="utf-8") as handle:
            handle.write(report_records(result))
    return 0


def _cmd_eval(args) -> int:
    spec = new_game(args.game, variant_from_string(args.game, args.variant))
    if args.state is None:
        state = spec.initial_state()
    else:
        text = sys.stdin.read() if args.state == "-" else open(
            args.state, encoding="utf-8").read()
        state = parse_state(spec, text)
    if spec.is_terminal(state):
        print("error: state is terminal", file=sys.stderr)
        return 2
    config = SearchConfig(time_budget=args.time, playouts_per_leaf=args.playouts,
                          rng_seed=args.seed, max_depth=args.depth,
                          backend=args.backend)
    evaluation = iterative_deepening_evaluate(spec, state, config)
    print(f"game: {spec.game_id} ({spec.variant_name})  "
          f"to_move: {state.to_move.value}  backend: {backend_name(spec, args.backend)}")
    print(f"completed depth: {evaluation.completed_depth}"
          f"{'  (exact)' if evaluation.exact else ''}")
    times = " ".join(f"{t:.3f}s" for t in evaluation.depth_times)
    print(f"iteration times: {times}")
    for move, value in evaluation.values.items():
        print(f"  {move_to_text(spec, move):<12} {value:.4f}")
    best = evaluation.best_move()
    print(f"best: {move_to_text(spec, best)}")
    return 0


def _render_board(spec, state) -> str:
    """Character-grid rendering of the current position."""
    board = spec.board
    marks = {0: ".", 1: "X", 2: "O"}
    cells = {}
    for i, (x, y) in enumerate(board.coords):
        cells[(int(round(x * 2)), int(round(y * 2)))] = marks[state.occupancy[i]]
    max_x = max(c for c, _ in cells)
    max_y = max(r for _, r in cells)
    rows = []
    for y in range(max_y, -1, -1):
        row = [cells.get((x, y), " ") for x in range(max_x + 1)]
        rows.append(" ".join(row).rstrip())
    return "\n".join(rows)


def _cmd_play(args) -> int:
    spec = new_game(args.game, variant_from_string(args.game, args.variant))
    human = PlayerId(args.side)
    params = preset(args.difficulty)
    config = AgentConfig(kind="hybrid",
                         search=SearchConfig(time_budget=args.time,
                                             rng_seed=args.seed),
                         difficulty=params)
    agent = build_agent(config)
    agent.begin_match(mix64(args.seed, 0xF1))
    state = spec.initial_state()
    print(f"{spec.game_id} ({spec.variant_name}); you are "
          f"{human.value} ({'X' if human is PlayerId.P1 else 'O'}), "
          f"difficulty {args.difficulty.capitalize()}")
    while not spec.is_terminal(state):
        print()
        print(_render_board(spec, state))
        if state.to_move == human:
            legal = spec.legal_moves(state)
            texts = [move_to_text(spec, m) for m in legal]
            print("your move; legal:", " ".join(texts))
            line = sys.stdin.readline()
            if not line:
                print("input closed; leaving the game")
                return 0
            text = line.strip()
            if text in ("quit", "exit"):
                return 0
            try:
                move = move_from_text(spec, text)
                state = spec.apply(state, move)
            except NotationError as exc:
                print(f"cannot read move: {exc}")
            except IllegalMoveError as exc:
                print(f"illegal move: {exc.rule}")
        else:
            move = agent.choose(spec, state)
            print(f"engine plays {move_to_text(spec, move)}")
            state = spec.apply(state, move)
    print()
    print(_render_board(spec, state))
    outcome = spec.outcome(state)
    if outcome.is_draw:
        print("draw")
    elif outcome.winner == human:
        print("you win")
    else:
        print("engine wins")
    return 0


def _cmd_serve(args) -> int:
    from . import service

    service.run(host=args.host, port=args.port, default_budget=args.budget,
                session_ttl=args.ttl, log_path=args.log)
    return 0


def _cmd_bench(args) -> int:
    from .bench import format_benchmark, run_benchmark

    games = None
    if args.game:
        try:
            games = [GameId(g) for g in args.game]
        except ValueError:
            known = ", ".join(g.value for g in GameId)
            raise ConfigError(f"unknown game; valid games: {known}") from None
    print(format_benchmark(run_benchmark(args.seconds, args.budget, games)))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"arena": _cmd_arena, "eval": _cmd_eval, "play": _cmd_play,
                "serve": _cmd_serve, "bench": _cmd_bench}
    try:
        return handlers[args.command](args)
    except NotationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
