/** End-to-end check against a real service instance.
 *
 * Starts `boardkit serve` on an ephemeral port, then exercises the same
 * code paths the browser client uses: catalog and board parsing, one
 * human move per game and difficulty preset with the AI reply required
 * inside budget plus grace, the ludii variants, illegal-move and
 * notation errors (whose verbatim text is what the UI displays), the
 * click state machine against live legal-move lists, and the
 * server-sent-event stream.
 *
 * Run with: npm run e2e (builds first; needs the Python package installed).
 */
import { spawn } from "node:child_process";
import process from "node:process";
import { parseBoard } from "../src/board.js";
import { MoveInput } from "../src/moveInput.js";
import { parseMoveText, parseStateText } from "../src/notation.js";
import { errorDetail, parseCatalog, parseSession, } from "../src/schema.js";
const BUDGET = 0.25; // seconds per AI move for every test session
const GRACE = 2.0; // allowance for scheduling and I/O on top of it
const PORT = 20000 + Math.floor(Math.random() * 10000);
const BASE = `http://127.0.0.1:${PORT}`;
let checks = 0;
const failures = [];
function check(condition, label) {
    checks++;
    if (condition) {
        console.log(`ok ${label}`);
    }
    else {
        failures.push(label);
        console.error(`FAIL ${label}`);
    }
}
function sleep(ms) {
    return new Promise((resolve) => setTimeout(resolve, ms));
}
async function api(path, init) {
    const response = await fetch(BASE + path, init);
    const body = await response.json().catch(() => null);
    if (!response.ok) {
        throw new ServiceError(response.status, errorDetail(body, `${response.status}`));
    }
    return body;
}
class ServiceError extends Error {
    status;
    detail;
    constructor(status, detail) {
        super(detail);
        this.status = status;
        this.detail = detail;
    }
}
async function createSession(body) {
    return parseSession(await api("/sessions", {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ time_budget: BUDGET, ...body }),
    }));
}
async function submitMove(id, move) {
    return parseSession(await api(`/sessions/${id}/moves`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ move }),
    }));
}
/** Wait out an AI turn; returns the payload and the wait in seconds. */
async function awaitReply(id) {
    const started = performance.now();
    const deadline = started + (BUDGET + GRACE) * 1000 + 5000;
    for (;;) {
        const payload = parseSession(await api(`/sessions/${id}`));
        if (payload.status !== "ai-thinking") {
            return { payload, seconds: (performance.now() - started) / 1000 };
        }
        if (performance.now() > deadline) {
            throw new Error(`session ${id}: AI reply never arrived`);
        }
        await sleep(40);
    }
}
async function waitForServer() {
    const deadline = Date.now() + 15000;
    for (;;) {
        try {
            await api("/games");
            return;
        }
        catch (error) {
            if (error instanceof ServiceError)
                throw error;
            if (Date.now() > deadline)
                throw new Error("service did not start");
            await sleep(100);
        }
    }
}
async function checkGamePresetMatrix(games, presets) {
    let seed = 1000;
    for (const game of games) {
        for (const preset of presets) {
            const label = `${game} / ${preset}`;
            const session = await createSession({ game, difficulty: preset, seed: seed++ });
            check(session.status === "awaiting-human", `${label}: human to move first`);
            check(session.legal_moves.length > 0, `${label}: legal moves offered`);
            const move = session.legal_moves[0];
            const started = performance.now();
            const afterMove = await submitMove(session.id, move);
            check(afterMove.history[0] === move, `${label}: move recorded`);
            const { payload, seconds } = await awaitReply(session.id);
            const total = (performance.now() - started) / 1000;
            const replied = payload.status === "finished" || payload.history.length === 2;
            check(replied, `${label}: AI replied`);
            check(total <= BUDGET + GRACE, `${label}: reply in ${total.toFixed(2)}s <= ${(BUDGET + GRACE).toFixed(2)}s`);
            check(payload.plies === payload.history.length, `${label}: plies match history`);
            void seconds;
        }
    }
}
async function checkBoards(games) {
    for (const game of games) {
        const response = await fetch(`${BASE}/games/${game}/board`);
        check(response.ok, `${game}: board served`);
        const board = parseBoard(await response.text());
        check(board.name === game, `${game}: board name matches`);
        check(board.positions.length > 0, `${game}: board has positions`);
    }
}
async function checkVariants() {
    for (const [game, variant] of [["tapatan", "ludii"], ["alquerque", "ludii"]]) {
        const session = await createSession({ game, variant, seed: 77 });
        check(session.variant === variant, `${game}/${variant}: session created`);
        const state = parseStateText(session.state);
        check(state.variant === variant, `${game}/${variant}: state text carries variant`);
    }
}
async function checkErrors() {
    const session = await createSession({ game: "tictactoe", seed: 5 });
    await submitMove(session.id, "b2");
    await awaitReply(session.id);
    try {
        await submitMove(session.id, "b2");
        check(false, "occupied move rejected");
    }
    catch (error) {
        const service = error;
        check(service.status === 422, "occupied move returns 422");
        check(service.detail === "position occupied", "occupied move carries the rule text for display");
    }
    try {
        await submitMove(session.id, "zz9");
        check(false, "bad notation rejected");
    }
    catch (error) {
        const service = error;
        check(service.status === 422, "bad notation returns 422");
        check(service.detail === "unknown position 'zz9'", "bad notation names the unknown cell");
    }
    try {
        await createSession({ game: "chess" });
        check(false, "unknown game rejected");
    }
    catch (error) {
        check(error.status === 422, "unknown game returns 422");
    }
}
async function checkMoveInputAgainstLiveMoves() {
    const session = await createSession({ game: "five-field-kono", seed: 31 });
    const input = new MoveInput(session.legal_moves);
    const target = parseMoveText(session.legal_moves[0]);
    let submitted = null;
    for (const cell of target.path) {
        const result = input.click(cell);
        if (result.kind === "submit")
            submitted = result.text;
    }
    check(submitted === target.text, "click sequence reproduces a live legal move");
    const ack = await submitMove(session.id, submitted ?? target.text);
    check(ack.history[0] === target.text, "clicked move accepted by the service");
    await awaitReply(session.id);
}
async function checkAiMovesFirst() {
    const session = await createSession({ game: "tictactoe", human_side: "P2", seed: 9 });
    check(session.status === "ai-thinking", "P2 session: AI starts thinking");
    const { payload, seconds } = await awaitReply(session.id);
    check(payload.history.length === 1, "P2 session: AI opened the game");
    check(payload.to_move === "P2", "P2 session: human to move after reply");
    check(seconds <= BUDGET + GRACE, "P2 session: opening reply within budget");
}
async function checkEventStream() {
    const session = await createSession({ game: "tictactoe", seed: 17 });
    const response = await fetch(`${BASE}/sessions/${session.id}/events`);
    check(response.ok && (response.headers.get("content-type") ?? "")
        .startsWith("text/event-stream"), "event stream opens");
    const reader = response.body.getReader();
    const decoder = new TextDecoder();
    let buffer = "";
    const events = [];
    const pump = async (until) => {
        const deadline = Date.now() + (BUDGET + GRACE) * 1000 + 5000;
        for (;;) {
            for (let split = buffer.indexOf("\n\n"); split >= 0; split = buffer.indexOf("\n\n")) {
                const block = buffer.slice(0, split);
                buffer = buffer.slice(split + 2);
                const data = block.split("\n")
                    .filter((line) => line.startsWith("data:"))
                    .map((line) => line.slice(5).trim())
                    .join("");
                if (data !== "") {
                    events.push(parseSession(JSON.parse(data)));
                    if (until(events[events.length - 1]))
                        return;
                }
            }
            if (Date.now() > deadline)
                throw new Error("event stream timed out");
            const chunk = await reader.read();
            if (chunk.done)
                throw new Error("event stream ended early");
            buffer += decoder.decode(chunk.value, { stream: true });
        }
    };
    await pump(() => events.length >= 1);
    check(events[0].plies === 0, "stream starts with a snapshot");
    const started = performance.now();
    await submitMove(session.id, "b2");
    await pump((latest) => latest.status === "awaiting-human");
    const seconds = (performance.now() - started) / 1000;
    check(events.some((event) => event.status === "ai-thinking"), "stream announces the thinking phase");
    const last = events[events.length - 1];
    check(last.history.length === 2, "stream delivers the AI reply");
    check(seconds <= BUDGET + GRACE, `stream reply in ${seconds.toFixed(2)}s within budget+grace`);
    await reader.cancel();
}
async function main() {
    let child = null;
    try {
        child = spawn("boardkit", ["serve", "--port", String(PORT), "--budget", String(BUDGET)], { stdio: ["ignore", "ignore", "pipe"] });
        let stderr = "";
        child.stderr.on("data", (chunk) => { stderr += chunk.toString(); });
        child.on("exit", (code) => {
            if (failures.length === 0 && checks === 0) {
                console.error(`service exited early (code ${code}):\n${stderr}`);
            }
        });
        await waitForServer();
        const catalog = parseCatalog(await api("/games"));
        const games = catalog.games.map((game) => game.id);
        check(games.length === 6, "catalog lists six games");
        const presets = Object.keys(catalog.difficulty_presets);
        check(presets.length === 3, "catalog lists three presets");
        await checkBoards(games);
        await checkGamePresetMatrix(games, presets);
        await checkVariants();
        await checkErrors();
        await checkMoveInputAgainstLiveMoves();
        await checkAiMovesFirst();
        await checkEventStream();
    }
    catch (error) {
        failures.push(String(error));
        console.error(`ERROR ${String(error)}`);
    }
    finally {
        if (child !== null) {
            child.kill("SIGTERM");
            await Promise.race([
                new Promise((resolve) => child.on("exit", resolve)),
                sleep(5000).then(() => child.kill("SIGKILL")),
            ]);
        }
    }
    if (failures.length > 0) {
        console.error(`\ne2e: ${failures.length} of ${checks} checks failed`);
        return 1;
    }
    console.log(`\ne2e: all ${checks} checks passed`);
    return 0;
}
main().then((code) => { process.exitCode = code; });
