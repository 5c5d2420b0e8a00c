/** Parsing for the engine's textual notations.
 *
 * Game states arrive as "key: value" lines with a space-separated
 * occupancy list ("a1=P1 b2=P2" or "-" when empty). Moves are plain
 * coordinates: "b2" places, "b2-c3" steps, "c3xc5xe5" is a chained
 * jump and "pass" passes.
 */

import type { Side } from "./schema.js";

export interface ParsedState {
  game: string;
  variant: string;
  occupancy: Map<string, Side>;
  toMove: Side;
  phase: string;
  plyCount: number;
  counters: Map<string, number>;
}

export class NotationError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "NotationError";
  }
}

function asSide(token: string, context: string): Side {
  if (token !== "P1" && token !== "P2") {
    throw new NotationError(`${context}: bad player ${JSON.stringify(token)}`);
  }
  return token;
}

export function parseStateText(text: string): ParsedState {
  const fields = new Map<string, string>();
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (line === "" || line.startsWith("#")) continue;
    const sep = line.indexOf(":");
    if (sep < 0) {
      throw new NotationError(`expected 'key: value', got ${JSON.stringify(line)}`);
    }
    fields.set(line.slice(0, sep).trim(), line.slice(sep + 1).trim());
  }

  for (const required of ["game", "occupancy", "to_move", "phase", "ply_count"]) {
    if (!fields.has(required)) {
      throw new NotationError(`missing field '${required}'`);
    }
  }

  const occupancy = new Map<string, Side>();
  const occText = fields.get("occupancy")!;
  if (occText !== "-") {
    for (const token of occText.split(/\s+/)) {
      const sep = token.indexOf("=");
      if (sep < 0) {
        throw new NotationError(`bad occupancy token ${JSON.stringify(token)}`);
      }
      occupancy.set(token.slice(0, sep), asSide(token.slice(sep + 1), "occupancy"));
    }
  }

  const plyCount = Number(fields.get("ply_count"));
  if (!Number.isInteger(plyCount)) {
    throw new NotationError(`bad ply_count ${JSON.stringify(fields.get("ply_count"))}`);
  }

  const counters = new Map<string, number>();
  const counterText = fields.get("counters");
  if (counterText !== undefined && counterText !== "-") {
    for (const token of counterText.split(/\s+/)) {
      const sep = token.indexOf("=");
      const value = Number(token.slice(sep + 1));
      if (sep < 0 || !Number.isInteger(value)) {
        throw new NotationError(`bad counter token ${JSON.stringify(token)}`);
      }
      counters.set(token.slice(0, sep), value);
    }
  }

  return {
    game: fields.get("game")!,
    variant: fields.get("variant") ?? "default",
    occupancy,
    toMove: asSide(fields.get("to_move")!, "to_move"),
    phase: fields.get("phase")!,
    plyCount,
    counters,
  };
}

export interface ParsedMove {
  /** The exact text the service accepts for this move. */
  text: string;
  /** Visited cells: [cell] places, [from, to] steps, longer for jumps. */
  path: string[];
  isPass: boolean;
}

export function parseMoveText(text: string): ParsedMove {
  if (text === "pass") return { text, path: [], isPass: true };
  if (text.includes("x")) return { text, path: text.split("x"), isPass: false };
  if (text.includes("-")) return { text, path: text.split("-"), isPass: false };
  return { text, path: [text], isPass: false };
}
