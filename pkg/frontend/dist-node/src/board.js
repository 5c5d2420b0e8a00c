/** Parser for the plain-text board files served at /games/{id}/board.
 *
 * Format, one directive per line (blank lines and #-comments ignored):
 *
 *   boardgraph 1
 *   meta name <name>
 *   meta style nodes|grid
 *   position <id> <x> <y>
 *   edge <a> <b>
 *   jump <from> <over> <to>
 *   line <id> <id> <id> [...]
 *
 * "nodes" boards draw movement edges and put pieces on intersections;
 * "grid" boards draw a field of squares. Jump triples define capture
 * geometry; the renderer does not draw them.
 */
export class BoardParseError extends Error {
    constructor(lineNo, message) {
        super(`board line ${lineNo}: ${message}`);
        this.name = "BoardParseError";
    }
}
function parseCoord(token, lineNo) {
    const value = Number(token);
    if (!Number.isFinite(value)) {
        throw new BoardParseError(lineNo, `bad coordinate ${JSON.stringify(token)}`);
    }
    return value;
}
export function parseBoard(text) {
    let name = "";
    let style = "nodes";
    const positions = [];
    const byId = new Map();
    const edges = [];
    const jumps = [];
    const lines = [];
    let sawHeader = false;
    const requireId = (id, lineNo) => {
        if (!byId.has(id)) {
            throw new BoardParseError(lineNo, `unknown position ${JSON.stringify(id)}`);
        }
        return id;
    };
    const rows = text.split("\n");
    for (let i = 0; i < rows.length; i++) {
        const lineNo = i + 1;
        const line = rows[i].trim();
        if (line === "" || line.startsWith("#"))
            continue;
        const parts = line.split(/\s+/);
        if (!sawHeader) {
            if (parts[0] !== "boardgraph" || parts[1] !== "1") {
                throw new BoardParseError(lineNo, "expected header 'boardgraph 1'");
            }
            sawHeader = true;
            continue;
        }
        switch (parts[0]) {
            case "meta":
                if (parts[1] === "name" && parts.length === 3) {
                    name = parts[2];
                }
                else if (parts[1] === "style" && parts.length === 3) {
                    if (parts[2] !== "nodes" && parts[2] !== "grid") {
                        throw new BoardParseError(lineNo, `unknown style ${JSON.stringify(parts[2])}`);
                    }
                    style = parts[2];
                }
                else {
                    throw new BoardParseError(lineNo, `bad meta directive ${JSON.stringify(line)}`);
                }
                break;
            case "position": {
                if (parts.length !== 4) {
                    throw new BoardParseError(lineNo, "position needs: id x y");
                }
                const id = parts[1];
                if (byId.has(id)) {
                    throw new BoardParseError(lineNo, `duplicate position ${JSON.stringify(id)}`);
                }
                const position = {
                    id,
                    x: parseCoord(parts[2], lineNo),
                    y: parseCoord(parts[3], lineNo),
                };
                positions.push(position);
                byId.set(id, position);
                break;
            }
            case "edge":
                if (parts.length !== 3) {
                    throw new BoardParseError(lineNo, "edge needs: a b");
                }
                edges.push([requireId(parts[1], lineNo), requireId(parts[2], lineNo)]);
                break;
            case "jump":
                if (parts.length !== 4) {
                    throw new BoardParseError(lineNo, "jump needs: from over to");
                }
                jumps.push([requireId(parts[1], lineNo), requireId(parts[2], lineNo),
                    requireId(parts[3], lineNo)]);
                break;
            case "line":
                if (parts.length < 3) {
                    throw new BoardParseError(lineNo, "line needs at least two positions");
                }
                lines.push(parts.slice(1).map((id) => requireId(id, lineNo)));
                break;
            default:
                throw new BoardParseError(lineNo, `unknown directive ${JSON.stringify(parts[0])}`);
        }
    }
    if (!sawHeader)
        throw new BoardParseError(1, "expected header 'boardgraph 1'");
    if (positions.length === 0)
        throw new BoardParseError(rows.length, "board has no positions");
    const width = Math.max(...positions.map((p) => p.x)) + 1;
    const height = Math.max(...positions.map((p) => p.y)) + 1;
    return { name, style, positions, edges, jumps, lines, byId, width, height };
}
