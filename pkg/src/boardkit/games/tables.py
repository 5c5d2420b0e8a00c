"""Flat rule tables consumed by the compiled kernel.

The kernel works on int arrays only; these tables translate a game's board
graph and rule flags into that shape. The pure-Python fallback never reads
them (it runs on the GameSpec object model), so they exist purely as the
compiled backend's contract.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

FAMILY_INSERT = 0     # insertion game, alignment win, full board draws
FAMILY_MOVE = 1       # optional placement quota then steps; alignment or fill-target win
FAMILY_CAPTURE = 2    # steps plus capture jumps; win by eliminating the opponent
FAMILY_REVERSI = 3

MAX_HOPS = 12


def _csr(rows: list[list[int]]) -> tuple[np.ndarray, np.ndarray]:
    start = np.zeros(len(rows) + 1, dtype=np.int32)
    flat: list[int] = []
    for i, row in enumerate(rows):
        flat.extend(row)
        start[i + 1] = len(flat)
    return start, np.asarray(flat, dtype=np.int32)


@dataclass
class KernelTables:
    family: int
    n: int
    adj_start: np.ndarray
    adj: np.ndarray
    jump_start: np.ndarray = field(default_factory=lambda: np.zeros(1, dtype=np.int32))
    jump_over: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int32))
    jump_to: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int32))
    line_start: np.ndarray = field(default_factory=lambda: np.zeros(1, dtype=np.int32))
    line_pos: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int32))
    target_p1: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int32))
    target_p2: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int32))
    ray_start: np.ndarray = field(default_factory=lambda: np.zeros(1, dtype=np.int32))
    ray_pos: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int32))
    quota: int = 0
    forced_capture: int = 0
    multi_capture: int = 0
    stuck_draw: int = 0
    max_hops: int = MAX_HOPS


def build_tables(
    spec,
    family: int,
    quota: int = 0,
    forced_capture: bool = False,
    multi_capture: bool = False,
    stuck_draw: bool = False,
    targets: tuple[list[int], list[int]] | None = None,
    rays: list[list[int]] | None = None,
) -> KernelTables:
    board = spec.board
    n = len(board)
    adj_start, adj = _csr([list(board.neighbors[i]) for i in range(n)])
    tables = KernelTables(family=family, n=n, adj_start=adj_start, adj=adj,
                          quota=quota,
                          forced_capture=int(forced_capture),
                          multi_capture=int(multi_capture),
                          stuck_draw=int(stuck_draw))
    if board.jumps:
        rows = [[] for _ in range(n)]
        for i in range(n):
            for over, to in board.jumps_from[i]:
                rows[i].append((over, to))
        tables.jump_start, flat = _csr([[v for pair in row for v in pair] for row in rows])
        # start offsets count (over, to) pairs, not ints
        tables.jump_start = (tables.jump_start // 2).astype(np.int32)
        tables.jump_over = flat[0::2].copy()
        tables.jump_to = flat[1::2].copy()
    if board.lines:
        tables.line_start, tables.line_pos = _csr([list(line) for line in board.lines])
    if targets is not None:
        tables.target_p1 = np.asarray(targets[0], dtype=np.int32)
        tables.target_p2 = np.asarray(targets[1], dtype=np.int32)
    if rays is not None:
        tables.ray_start, tables.ray_pos = _csr(rays)
    return tables
