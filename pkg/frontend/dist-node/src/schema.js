/** Runtime validation of service payloads.
 *
 * Every response that crosses the HTTP boundary is checked here before
 * the rest of the client touches it, so a shape mismatch surfaces as a
 * clear SchemaError naming the offending path rather than as an
 * undefined somewhere in the UI.
 */
export class SchemaError extends Error {
    constructor(path, expected, got) {
        super(`${path}: expected ${expected}, got ${describe(got)}`);
        this.name = "SchemaError";
    }
}
function describe(value) {
    if (value === null)
        return "null";
    if (Array.isArray(value))
        return "an array";
    return typeof value;
}
function asObject(value, path) {
    if (typeof value !== "object" || value === null || Array.isArray(value)) {
        throw new SchemaError(path, "an object", value);
    }
    return value;
}
function asString(value, path) {
    if (typeof value !== "string")
        throw new SchemaError(path, "a string", value);
    return value;
}
function asNumber(value, path) {
    if (typeof value !== "number" || Number.isNaN(value)) {
        throw new SchemaError(path, "a number", value);
    }
    return value;
}
function asBoolean(value, path) {
    if (typeof value !== "boolean")
        throw new SchemaError(path, "a boolean", value);
    return value;
}
function asStringArray(value, path) {
    if (!Array.isArray(value))
        throw new SchemaError(path, "an array", value);
    return value.map((item, i) => asString(item, `${path}[${i}]`));
}
function asSide(value, path) {
    const text = asString(value, path);
    if (text !== "P1" && text !== "P2") {
        throw new SchemaError(path, '"P1" or "P2"', value);
    }
    return text;
}
const STATUSES = ["awaiting-human", "ai-thinking", "finished"];
export function parseCatalog(value) {
    const root = asObject(value, "catalog");
    const rawGames = root.games;
    if (!Array.isArray(rawGames)) {
        throw new SchemaError("catalog.games", "an array", rawGames);
    }
    const games = rawGames.map((entry, i) => {
        const game = asObject(entry, `catalog.games[${i}]`);
        return {
            id: asString(game.id, `catalog.games[${i}].id`),
            variants: asStringArray(game.variants, `catalog.games[${i}].variants`),
        };
    });
    const rawPresets = asObject(root.difficulty_presets, "catalog.difficulty_presets");
    const presets = {};
    for (const [name, raw] of Object.entries(rawPresets)) {
        const p = asObject(raw, `catalog.difficulty_presets.${name}`);
        presets[name] = {
            mu: asNumber(p.mu, `catalog.difficulty_presets.${name}.mu`),
            sigma: asNumber(p.sigma, `catalog.difficulty_presets.${name}.sigma`),
        };
    }
    return {
        games,
        difficulty_presets: presets,
        default_time_budget: asNumber(root.default_time_budget, "catalog.default_time_budget"),
    };
}
export function parseSession(value) {
    const root = asObject(value, "session");
    const status = asString(root.status, "session.status");
    if (!STATUSES.includes(status)) {
        throw new SchemaError("session.status", STATUSES.map((s) => `"${s}"`).join(" or "), status);
    }
    let outcome = null;
    if (root.outcome !== null && root.outcome !== undefined) {
        const raw = asObject(root.outcome, "session.outcome");
        const winner = raw.winner === null ? null : asSide(raw.winner, "session.outcome.winner");
        outcome = { winner, draw: asBoolean(raw.draw, "session.outcome.draw") };
    }
    const rawDifficulty = asObject(root.difficulty, "session.difficulty");
    const difficultyName = rawDifficulty.name === null
        ? null
        : asString(rawDifficulty.name, "session.difficulty.name");
    let evaluation = null;
    if (root.evaluation !== null && root.evaluation !== undefined) {
        const raw = asObject(root.evaluation, "session.evaluation");
        evaluation = {};
        for (const [move, score] of Object.entries(raw)) {
            evaluation[move] = asNumber(score, `session.evaluation.${move}`);
        }
    }
    return {
        id: asString(root.id, "session.id"),
        game: asString(root.game, "session.game"),
        variant: asString(root.variant, "session.variant"),
        status: status,
        state: asString(root.state, "session.state"),
        to_move: asSide(root.to_move, "session.to_move"),
        plies: asNumber(root.plies, "session.plies"),
        legal_moves: asStringArray(root.legal_moves, "session.legal_moves"),
        outcome,
        human_side: asSide(root.human_side, "session.human_side"),
        difficulty: {
            name: difficultyName,
            mu: asNumber(rawDifficulty.mu, "session.difficulty.mu"),
            sigma: asNumber(rawDifficulty.sigma, "session.difficulty.sigma"),
        },
        time_budget: asNumber(root.time_budget, "session.time_budget"),
        history: asStringArray(root.history, "session.history"),
        evaluation,
    };
}
/** Error payloads: {"detail": "..."} from the service, anything else raw. */
export function errorDetail(body, fallback) {
    if (typeof body === "object" && body !== null && !Array.isArray(body)) {
        const detail = body.detail;
        if (typeof detail === "string")
            return detail;
    }
    return fallback;
}
