/** Click-to-move state machine.
 *
 * Built from the legal move list of the current position, it turns a
 * sequence of cell clicks into a move text. Placements submit on the
 * first click; steps select an origin and submit on the target click;
 * chained jumps grow hop by hop. When a complete jump is a prefix of a
 * longer legal jump, the input stays open and `confirm()` plays the
 * shorter chain.
 */

import { parseMoveText, type ParsedMove } from "./notation.js";

export type ClickResult =
  | { kind: "submit"; text: string }
  | { kind: "pending" }
  | { kind: "cleared" }
  | { kind: "ignored" };

function isPrefix(prefix: string[], path: string[]): boolean {
  return prefix.length <= path.length && prefix.every((cell, i) => path[i] === cell);
}

export class MoveInput {
  private moves: ParsedMove[];
  private path: string[] = [];

  constructor(legalTexts: string[]) {
    this.moves = legalTexts.map(parseMoveText);
  }

  /** Cells that can start a move (for highlighting an idle board). */
  origins(): Set<string> {
    const origins = new Set<string>();
    for (const move of this.moves) {
      if (!move.isPass) origins.add(move.path[0]);
    }
    return origins;
  }

  /** The cells clicked so far. */
  selection(): string[] {
    return [...this.path];
  }

  /** Cells that would extend the current selection (empty when idle). */
  targets(): Set<string> {
    const targets = new Set<string>();
    if (this.path.length === 0) return targets;
    for (const move of this.moves) {
      if (!move.isPass && isPrefix(this.path, move.path)
          && move.path.length > this.path.length) {
        targets.add(move.path[this.path.length]);
      }
    }
    return targets;
  }

  /** The legal move text matching the selection exactly, if any. */
  pendingText(): string | null {
    const exact = this.moves.find(
      (move) => !move.isPass && move.path.length === this.path.length
        && isPrefix(this.path, move.path));
    return exact ? exact.text : null;
  }

  /** True when the selection is playable but longer chains remain open. */
  needsConfirm(): boolean {
    return this.pendingText() !== null && this.targets().size > 0;
  }

  canPass(): boolean {
    return this.moves.some((move) => move.isPass);
  }

  passText(): string | null {
    const pass = this.moves.find((move) => move.isPass);
    return pass ? pass.text : null;
  }

  reset(): void {
    this.path = [];
  }

  click(cell: string): ClickResult {
    if (this.path.length > 0) {
      const extended = [...this.path, cell];
      if (this.moves.some((move) => !move.isPass && isPrefix(extended, move.path))) {
        this.path = extended;
        return this.resolve();
      }
      // Not a continuation: clear, and start over if the cell opens a move.
      this.reset();
      if (this.canStart(cell)) return this.click(cell);
      return { kind: "cleared" };
    }
    if (!this.canStart(cell)) return { kind: "ignored" };
    this.path = [cell];
    return this.resolve();
  }

  /** Play the currently selected chain even though it could be extended. */
  confirm(): ClickResult {
    const text = this.pendingText();
    if (text === null) return { kind: "ignored" };
    this.reset();
    return { kind: "submit", text };
  }

  private canStart(cell: string): boolean {
    return this.moves.some((move) => !move.isPass && move.path[0] === cell);
  }

  private resolve(): ClickResult {
    const text = this.pendingText();
    if (text !== null && this.targets().size === 0) {
      this.reset();
      return { kind: "submit", text };
    }
    return { kind: "pending" };
  }
}
