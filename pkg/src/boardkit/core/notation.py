"""Canonical textual forms: state records, move notation and state digests.

The state record is a structured key/value text that round-trips exactly
(``parse(serialize(s)) == s``). It is used by the CLI, the session API and
the match logs, and its serialized form is what state digests hash.
"""
from __future__ import annotations

import hashlib

from .spec import GameSpec
from .types import GameState, Move, MoveKind, PlayerId


class NotationError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at field {position})"
        super().__init__(message)
        self.position = position


def serialize_state(spec: GameSpec, state: GameState) -> str:
    ids = spec.board.ids
    occupied = [f"{ids[i]}={PlayerId.from_code(c).value}" for i, c in enumerate(state.occupancy) if c]
    out = [
        f"game: {spec.game_id}",
        f"variant: {spec.variant_name}",
        "occupancy: " + (" ".join(occupied) if occupied else "-"),
        f"to_move: {state.to_move.value}",
        f"phase: {state.phase}",
        f"ply_count: {state.ply_count}",
    ]
    if state.counters:
        out.append("counters: " + " ".join(f"{k}={v}" for k, v in state.counters))
    return "\n".join(out) + "\n"


def parse_state(spec: GameSpec, text: str) -> GameState:
    fields: dict[str, str] = {}
    for pos, raw in enumerate(text.splitlines()):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise NotationError(f"expected 'key: value', got {line!r}", pos)
        key, value = line.split(":", 1)
        fields[key.strip()] = value.strip()
    for pos, required in enumerate(("game", "occupancy", "to_move", "phase", "ply_count")):
        if required not in fields:
            raise NotationError(f"missing field '{required}'", pos)
    if fields["game"] != spec.game_id:
        raise NotationError(f"state is for game '{fields['game']}', not '{spec.game_id}'")
    if fields.get("variant", spec.variant_name) != spec.variant_name:
        raise NotationError(f"state is for variant '{fields['variant']}', not '{spec.variant_name}'")
    occ = [0] * len(spec.board)
    if fields["occupancy"] != "-":
        for pos, token in enumerate(fields["occupancy"].split()):
            if "=" not in token:
                raise NotationError(f"bad occupancy token {token!r}", pos)
            pid, mark = token.split("=", 1)
            if pid not in spec.board.index:
                raise NotationError(f"unknown position '{pid}'", pos)
            try:
                occ[spec.board.index[pid]] = PlayerId(mark).code
            except ValueError:
                raise NotationError(f"bad mark {mark!r} for '{pid}'", pos) from None
    try:
        to_move = PlayerId(fields["to_move"])
    except ValueError:
        raise NotationError(f"bad to_move {fields['to_move']!r}") from None
    counters: list[tuple[str, int]] = []
    if "counters" in fields and fields["counters"] != "-":
        for token in fields["counters"].split():
            name, value = token.split("=", 1)
            counters.append((name, int(value)))
    return GameState(
        occupancy=tuple(occ),
        to_move=to_move,
        phase=fields["phase"],
        ply_count=int(fields["ply_count"]),
        counters=tuple(sorted(counters)),
    )


def state_digest(spec: GameSpec, state: GameState) -> str:
    """Stable 16-hex-char digest of the canonical serialization."""
    data = serialize_state(spec, state).encode()
    return hashlib.blake2b(data, digest_size=8).hexdigest()


def state_digest64(spec: GameSpec, state: GameState) -> int:
    return int(state_digest(spec, state), 16)


# -- move notation --------------------------------------------------------

def move_to_text(spec: GameSpec, move: Move) -> str:
    ids = spec.board.ids
    if move.kind is MoveKind.INSERT:
        return ids[move.pos]
    if move.kind is MoveKind.STEP:
        return f"{ids[move.frm]}-{ids[move.to]}"
    if move.kind is MoveKind.JUMP:
        return "x".join([ids[move.frm]] + [ids[to] for _, to in move.hops])
    return "pass"


def move_from_text(spec: GameSpec, text: str) -> Move:
    board = spec.board
    text = text.strip()
    if text == "pass":
        return Move.pass_()

    def look(pid: str) -> int:
        if pid not in board.index:
            raise NotationError(f"unknown position '{pid}'")
        return board.index[pid]

    if "x" in text:
        stops = [look(p) for p in text.split("x")]
        if len(stops) < 2:
            raise NotationError(f"bad jump {text!r}")
        hops = []
        cur = stops[0]
        for to in stops[1:]:
            over = [o for o, t in board.jumps_from[cur] if t == to]
            if not over:
                raise NotationError(f"no jump from '{board.ids[cur]}' to '{board.ids[to]}'")
            hops.append((over[0], to))
            cur = to
        return Move.jump(stops[0], tuple(hops))
    if "-" in text:
        frm, to = text.split("-", 1)
        return Move.step(look(frm), look(to))
    return Move.insert(look(text))
