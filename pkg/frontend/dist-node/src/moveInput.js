/** Click-to-move state machine.
 *
 * Built from the legal move list of the current position, it turns a
 * sequence of cell clicks into a move text. Placements submit on the
 * first click; steps select an origin and submit on the target click;
 * chained jumps grow hop by hop. When a complete jump is a prefix of a
 * longer legal jump, the input stays open and `confirm()` plays the
 * shorter chain.
 */
import { parseMoveText } from "./notation.js";
function isPrefix(prefix, path) {
    return prefix.length <= path.length && prefix.every((cell, i) => path[i] === cell);
}
export class MoveInput {
    moves;
    path = [];
    constructor(legalTexts) {
        this.moves = legalTexts.map(parseMoveText);
    }
    /** Cells that can start a move (for highlighting an idle board). */
    origins() {
        const origins = new Set();
        for (const move of this.moves) {
            if (!move.isPass)
                origins.add(move.path[0]);
        }
        return origins;
    }
    /** The cells clicked so far. */
    selection() {
        return [...this.path];
    }
    /** Cells that would extend the current selection (empty when idle). */
    targets() {
        const targets = new Set();
        if (this.path.length === 0)
            return targets;
        for (const move of this.moves) {
            if (!move.isPass && isPrefix(this.path, move.path)
                && move.path.length > this.path.length) {
                targets.add(move.path[this.path.length]);
            }
        }
        return targets;
    }
    /** The legal move text matching the selection exactly, if any. */
    pendingText() {
        const exact = this.moves.find((move) => !move.isPass && move.path.length === this.path.length
            && isPrefix(this.path, move.path));
        return exact ? exact.text : null;
    }
    /** True when the selection is playable but longer chains remain open. */
    needsConfirm() {
        return this.pendingText() !== null && this.targets().size > 0;
    }
    canPass() {
        return this.moves.some((move) => move.isPass);
    }
    passText() {
        const pass = this.moves.find((move) => move.isPass);
        return pass ? pass.text : null;
    }
    reset() {
        this.path = [];
    }
    click(cell) {
        if (this.path.length > 0) {
            const extended = [...this.path, cell];
            if (this.moves.some((move) => !move.isPass && isPrefix(extended, move.path))) {
                this.path = extended;
                return this.resolve();
            }
            // Not a continuation: clear, and start over if the cell opens a move.
            this.reset();
            if (this.canStart(cell))
                return this.click(cell);
            return { kind: "cleared" };
        }
        if (!this.canStart(cell))
            return { kind: "ignored" };
        this.path = [cell];
        return this.resolve();
    }
    /** Play the currently selected chain even though it could be extended. */
    confirm() {
        const text = this.pendingText();
        if (text === null)
            return { kind: "ignored" };
        this.reset();
        return { kind: "submit", text };
    }
    canStart(cell) {
        return this.moves.some((move) => !move.isPass && move.path[0] === cell);
    }
    resolve() {
        const text = this.pendingText();
        if (text !== null && this.targets().size === 0) {
            this.reset();
            return { kind: "submit", text };
        }
        return { kind: "pending" };
    }
}
