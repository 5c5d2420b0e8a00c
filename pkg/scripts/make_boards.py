#!/usr/bin/env python3
"""Regenerates the board-graph data files under src/boardkit/games/boards/.

The files are the source of truth at runtime; this script exists so the
geometry (edges, jump triples, win lines) stays reproducible.
"""
from __future__ import annotations

import pathlib
import sys

SRC = pathlib.Path(__file__).resolve().parent.parent / "src"
sys.path.insert(0, str(SRC))

from boardkit.core.graph import BoardGraph, grid_ids, parse_grid_id  # noqa: E402

OUT = SRC / "boardkit" / "games" / "boards"


def build_grid(width, height):
    ids = grid_ids(width, height)
    index = {pid: i for i, pid in enumerate(ids)}
    coords = [tuple(map(float, parse_grid_id(pid))) for pid in ids]
    return ids, index, coords


def edges_from_deltas(ids, index, deltas):
    edges = set()
    for pid in ids:
        x, y = parse_grid_id(pid)
        for dx, dy in deltas:
            nid = f"{chr(ord('a') + x + dx)}{y + dy + 1}"
            if nid in index:
                a, b = index[pid], index[nid]
                edges.add((min(a, b), max(a, b)))
    return tuple(sorted(edges))


def alquerque_edges(ids, index):
    """Orthogonal everywhere; diagonals only on even-parity points."""
    edges = set(edges_from_deltas(ids, index, [(1, 0), (0, 1)]))
    for pid in ids:
        x, y = parse_grid_id(pid)
        if (x + y) % 2 != 0:
            continue
        for dx, dy in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
            nid = f"{chr(ord('a') + x + dx)}{y + dy + 1}"
            if nid in index:
                a, b = index[pid], index[nid]
                edges.add((min(a, b), max(a, b)))
    return tuple(sorted(edges))


def jump_triples(ids, index, edges):
    """(from, over, to) with over adjacent to both and the three collinear."""
    edge_set = set(edges)

    def adjacent(a, b):
        return (min(a, b), max(a, b)) in edge_set

    triples = []
    for frm_id in ids:
        fx, fy = parse_grid_id(frm_id)
        frm = index[frm_id]
        for over in range(len(ids)):
            if not adjacent(frm, over):
                continue
            ox, oy = parse_grid_id(ids[over])
            tx, ty = 2 * ox - fx, 2 * oy - fy
            to_id = f"{chr(ord('a') + tx)}{ty + 1}"
            if to_id in index and adjacent(over, index[to_id]):
                triples.append((frm, over, index[to_id]))
    return tuple(sorted(triples))


def straight_lines(ids, index, edges, length):
    """Length-``length`` windows of straight runs; if the graph has edges,
    consecutive run members must be connected."""
    edge_set = set(edges)

    def connected(a, b):
        return not edge_set or (min(a, b), max(a, b)) in edge_set

    runs = []
    for delta in ((1, 0), (0, 1), (1, 1), (1, -1)):
        seen = set()
        for pid in ids:
            x, y = parse_grid_id(pid)
            px, py = x - delta[0], y - delta[1]
            prev = f"{chr(ord('a') + px)}{py + 1}"
            prev_ok = prev in index and connected(index[prev], index[pid])
            if prev_ok:
                continue  # not a run start
            run = [index[pid]]
            cx, cy = x, y
            while True:
                nid = f"{chr(ord('a') + cx + delta[0])}{cy + delta[1] + 1}"
                if nid not in index or not connected(run[-1], index[nid]):
                    break
                run.append(index[nid])
                cx, cy = cx + delta[0], cy + delta[1]
            key = tuple(run)
            if len(run) >= length and key not in seen:
                seen.add(key)
                runs.append(run)
    lines = []
    for run in runs:
        for start in range(len(run) - length + 1):
            lines.append(tuple(run[start:start + length]))
    return tuple(sorted(lines))


def make(name, style, size, edges_fn, jumps=False, line_len=0):
    ids, index, coords = build_grid(size, size)
    edges = edges_fn(ids, index) if edges_fn else ()
    graph = BoardGraph(
        name=name,
        style=style,
        ids=tuple(ids),
        coords=tuple(coords),
        edges=edges,
        jumps=jump_triples(ids, index, edges) if jumps else (),
        lines=straight_lines(ids, index, edges, line_len) if line_len else (),
    )
    path = OUT / f"{name}.board"
    path.write_text(graph.serialize())
    print(f"{path.name}: {len(ids)} positions, {len(graph.edges)} edges, "
          f"{len(graph.jumps)} jumps, {len(graph.lines)} lines")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    make("tictactoe", "grid", 3, None, line_len=3)
    make("tapatan", "nodes", 3,
         lambda ids, index: tuple(sorted(
             set(edges_from_deltas(ids, index, [(1, 0), (0, 1)]))
             | {tuple(sorted((index["b2"], index[c]))) for c in ("a1", "a3", "c1", "c3")}
         )),
         line_len=3)
    make("alquerque", "nodes", 5, alquerque_edges, jumps=True)
    make("tsoro-yematatu", "nodes", 5, alquerque_edges, line_len=4)
    make("five-field-kono", "nodes", 5,
         lambda ids, index: edges_from_deltas(ids, index, [(1, 1), (1, -1)]))
    make("reversi", "grid", 8,
         lambda ids, index: edges_from_deltas(ids, index, [(1, 0), (0, 1), (1, 1), (1, -1)]))


if __name__ == "__main__":
    main()
