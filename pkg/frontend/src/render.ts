/** SVG board rendering.
 *
 * Rebuilds the scene on every update: cheap at these board sizes and
 * keeps the renderer stateless. Board y grows upward, SVG y downward,
 * so rows are flipped. "grid" boards draw a checkered field, "nodes"
 * boards draw the movement edges with discs on the intersections.
 */

import type { Board, BoardPosition } from "./board.js";
import type { Side } from "./schema.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const UNIT = 72;
const MARGIN = 52;

export interface BoardView {
  occupancy: Map<string, Side>;
  selectable: Set<string>;
  selected: string[];
  targets: Set<string>;
  lastMove: Set<string>;
}

function element<K extends keyof SVGElementTagNameMap>(
  tag: K, attrs: Record<string, string>): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

export function drawBoard(
  svg: SVGSVGElement,
  board: Board,
  view: BoardView,
  onCell: (id: string) => void,
): void {
  const maxY = board.height - 1;
  const px = (p: BoardPosition) => MARGIN + p.x * UNIT;
  const py = (p: BoardPosition) => MARGIN + (maxY - p.y) * UNIT;
  const width = MARGIN * 2 + (board.width - 1) * UNIT;
  const height = MARGIN * 2 + (board.height - 1) * UNIT;

  svg.replaceChildren();
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);

  if (board.style === "grid") {
    for (const p of board.positions) {
      svg.appendChild(element("rect", {
        x: String(px(p) - UNIT / 2),
        y: String(py(p) - UNIT / 2),
        width: String(UNIT),
        height: String(UNIT),
        class: (p.x + p.y) % 2 === 0 ? "square dark" : "square light",
      }));
    }
  } else {
    for (const [a, b] of board.edges) {
      const pa = board.byId.get(a)!;
      const pb = board.byId.get(b)!;
      svg.appendChild(element("line", {
        x1: String(px(pa)), y1: String(py(pa)),
        x2: String(px(pb)), y2: String(py(pb)),
        class: "edge",
      }));
    }
    for (const p of board.positions) {
      svg.appendChild(element("circle", {
        cx: String(px(p)), cy: String(py(p)), r: "7", class: "node",
      }));
    }
  }

  const selectedSet = new Set(view.selected);
  for (const p of board.positions) {
    const group = element("g", { "data-cell": p.id });
    const classes = ["cell"];
    if (view.lastMove.has(p.id)) classes.push("last");
    if (view.selectable.has(p.id)) classes.push("selectable");
    if (selectedSet.has(p.id)) classes.push("picked");
    if (view.targets.has(p.id)) classes.push("target");
    group.setAttribute("class", classes.join(" "));

    if (view.lastMove.has(p.id)) {
      group.appendChild(element("circle", {
        cx: String(px(p)), cy: String(py(p)), r: String(UNIT * 0.46),
        class: "halo",
      }));
    }
    const side = view.occupancy.get(p.id);
    if (side !== undefined) {
      group.appendChild(element("circle", {
        cx: String(px(p)), cy: String(py(p)), r: String(UNIT * 0.36),
        class: side === "P1" ? "piece p1" : "piece p2",
      }));
    }
    if (view.targets.has(p.id)) {
      group.appendChild(element("circle", {
        cx: String(px(p)), cy: String(py(p)), r: String(UNIT * 0.16),
        class: "target-dot",
      }));
    }
    if (selectedSet.has(p.id)) {
      group.appendChild(element("circle", {
        cx: String(px(p)), cy: String(py(p)), r: String(UNIT * 0.42),
        class: "picked-ring",
      }));
    }

    // Transparent hit area on top so every cell takes clicks.
    const hit = element("circle", {
      cx: String(px(p)), cy: String(py(p)), r: String(UNIT * 0.48),
      class: "hit",
    });
    hit.addEventListener("click", () => onCell(p.id));
    group.appendChild(hit);
    svg.appendChild(group);
  }
}
