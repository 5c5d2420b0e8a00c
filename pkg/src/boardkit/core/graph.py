"""Board graphs and their on-disk format.

A board graph is the geometry every game is defined on: positions with 2D
display coordinates, a symmetric adjacency relation, optional capture-jump
triples and optional straight win lines. Graphs are shipped as data files
(``*.board``) with a versioned header; the same file is served to the web
client for rendering.

File format (line oriented, ``#`` comments allowed)::

    boardgraph 1
    meta name alquerque
    meta style nodes
    position a1 0 0
    edge a1 a2
    jump a1 b2 c3
    line a1 b1 c1
"""
from __future__ import annotations

from dataclasses import dataclass, field

FORMAT_VERSION = 1


class BoardFormatError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


@dataclass(frozen=True)
class BoardGraph:
    name: str
    style: str                                   # "nodes" or "grid"
    ids: tuple[str, ...]                         # index -> position id
    coords: tuple[tuple[float, float], ...]
    edges: tuple[tuple[int, int], ...]           # normalized a < b, sorted
    jumps: tuple[tuple[int, int, int], ...]      # (frm, over, to)
    lines: tuple[tuple[int, ...], ...]
    index: dict[str, int] = field(default_factory=dict, compare=False)
    neighbors: tuple[tuple[int, ...], ...] = field(default=(), compare=False)
    jumps_from: tuple[tuple[tuple[int, int], ...], ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {pid: i for i, pid in enumerate(self.ids)})
        n = len(self.ids)
        nb: list[list[int]] = [[] for _ in range(n)]
        for a, b in self.edges:
            nb[a].append(b)
            nb[b].append(a)
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(x)) for x in nb))
        jf: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for frm, over, to in self.jumps:
            jf[frm].append((over, to))
        object.__setattr__(self, "jumps_from", tuple(tuple(sorted(x, key=lambda h: h[1])) for x in jf))
        self.validate()

    def __len__(self) -> int:
        return len(self.ids)

    def validate(self) -> None:
        n = len(self.ids)
        if len(set(self.ids)) != n:
            raise BoardFormatError("duplicate position ids")
        edge_set = set(self.edges)
        for a, b in self.edges:
            if not (0 <= a < n and 0 <= b < n) or a == b:
                raise BoardFormatError(f"bad edge ({a},{b})")
        for frm, over, to in self.jumps:
            for p in (frm, over, to):
                if not 0 <= p < n:
                    raise BoardFormatError(f"jump references unknown position {p}")
            if (min(frm, over), max(frm, over)) not in edge_set:
                raise BoardFormatError(f"jump over-cell not adjacent to origin: {self.ids[frm]}-{self.ids[over]}")
            if (min(over, to), max(over, to)) not in edge_set:
                raise BoardFormatError(f"jump over-cell not adjacent to landing: {self.ids[over]}-{self.ids[to]}")
        for line in self.lines:
            for p in line:
                if not 0 <= p < n:
                    raise BoardFormatError(f"line references unknown position {p}")

    # -- serialization ----------------------------------------------------

    def serialize(self) -> str:
        out = [f"boardgraph {FORMAT_VERSION}"]
        out.append(f"meta name {self.name}")
        out.append(f"meta style {self.style}")
        for pid, (x, y) in zip(self.ids, self.coords):
            out.append(f"position {pid} {_fmt(x)} {_fmt(y)}")
        for a, b in self.edges:
            out.append(f"edge {self.ids[a]} {self.ids[b]}")
        for frm, over, to in self.jumps:
            out.append(f"jump {self.ids[frm]} {self.ids[over]} {self.ids[to]}")
        for line in self.lines:
            out.append("line " + " ".join(self.ids[p] for p in line))
        return "\n".join(out) + "\n"

    @staticmethod
    def parse(text: str) -> "BoardGraph":
        name = ""
        style = "nodes"
        ids: list[str] = []
        coords: list[tuple[float, float]] = []
        raw_edges: list[tuple[str, str]] = []
        raw_jumps: list[tuple[str, str, str]] = []
        raw_lines: list[tuple[str, ...]] = []
        header_seen = False
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if not header_seen:
                if parts[0] != "boardgraph" or len(parts) != 2:
                    raise BoardFormatError("missing 'boardgraph <version>' header", line_no)
                if int(parts[1]) != FORMAT_VERSION:
                    raise BoardFormatError(f"unsupported board format version {parts[1]}", line_no)
                header_seen = True
                continue
            kind, args = parts[0], parts[1:]
            if kind == "meta":
                if len(args) < 2:
                    raise BoardFormatError("meta needs key and value", line_no)
                if args[0] == "name":
                    name = " ".join(args[1:])
                elif args[0] == "style":
                    style = args[1]
            elif kind == "position":
                if len(args) != 3:
                    raise BoardFormatError("position needs: id x y", line_no)
                ids.append(args[0])
                coords.append((float(args[1]), float(args[2])))
            elif kind == "edge":
                if len(args) != 2:
                    raise BoardFormatError("edge needs two position ids", line_no)
                raw_edges.append((args[0], args[1]))
            elif kind == "jump":
                if len(args) != 3:
                    raise BoardFormatError("jump needs: from over to", line_no)
                raw_jumps.append((args[0], args[1], args[2]))
            elif kind == "line":
                if len(args) < 2:
                    raise BoardFormatError("line needs at least two position ids", line_no)
                raw_lines.append(tuple(args))
            else:
                raise BoardFormatError(f"unknown record '{kind}'", line_no)
        if not header_seen:
            raise BoardFormatError("empty board file")
        index = {pid: i for i, pid in enumerate(ids)}

        def look(pid: str, line_no: int | None = None) -> int:
            try:
                return index[pid]
            except KeyError:
                raise BoardFormatError(f"unknown position id '{pid}'", line_no) from None

        edges = sorted({(min(look(a), look(b)), max(look(a), look(b))) for a, b in raw_edges})
        jumps = tuple((look(f), look(o), look(t)) for f, o, t in raw_jumps)
        lines = tuple(tuple(look(p) for p in ln) for ln in raw_lines)
        return BoardGraph(
            name=name, style=style, ids=tuple(ids), coords=tuple(coords),
            edges=tuple(edges), jumps=jumps, lines=lines,
        )


def _fmt(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(v)


def grid_ids(width: int, height: int) -> list[str]:
    """Algebraic ids (a1 bottom-left), listed in id-sorted order."""
    ids = [f"{chr(ord('a') + x)}{y + 1}" for y in range(height) for x in range(width)]
    return sorted(ids)


def parse_grid_id(pid: str) -> tuple[int, int]:
    return ord(pid[0]) - ord("a"), int(pid[1:]) - 1
