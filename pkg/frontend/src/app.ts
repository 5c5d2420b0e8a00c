/** Application wiring: catalog, session lifecycle, board interaction.
 *
 * The server is the rules authority; the client only renders payloads
 * and builds move texts from clicks. Updates arrive over server-sent
 * events with a polling fallback.
 */

import { ApiClient, ApiError } from "./api.js";
import { parseBoard, type Board } from "./board.js";
import { MoveInput } from "./moveInput.js";
import { parseMoveText, parseStateText } from "./notation.js";
import { drawBoard as drawBoardSvg } from "./render.js";
import type { Catalog, SessionPayload } from "./schema.js";

function apiBase(): string {
  return new URLSearchParams(window.location.search).get("api") ?? "";
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing element #${id}`);
  return node as T;
}

const api = new ApiClient(apiBase());

const gameSelect = byId<HTMLSelectElement>("game");
const variantSelect = byId<HTMLSelectElement>("variant");
const difficultySelect = byId<HTMLSelectElement>("difficulty");
const customRow = byId<HTMLDivElement>("custom-difficulty");
const muInput = byId<HTMLInputElement>("mu");
const sigmaInput = byId<HTMLInputElement>("sigma");
const sideSelect = byId<HTMLSelectElement>("side");
const budgetInput = byId<HTMLInputElement>("budget");
const revealCheckbox = byId<HTMLInputElement>("reveal");
const newGameButton = byId<HTMLButtonElement>("new-game");
const statusLine = byId<HTMLDivElement>("status");
const messageLine = byId<HTMLDivElement>("message");
const svgElement = document.getElementById("board");
if (svgElement === null) throw new Error("missing element #board");
const svg = svgElement as unknown as SVGSVGElement;
const passButton = byId<HTMLButtonElement>("pass");
const confirmButton = byId<HTMLButtonElement>("confirm");
const historyList = byId<HTMLOListElement>("history");
const evaluationBox = byId<HTMLDivElement>("evaluation");

let catalog: Catalog | null = null;
let board: Board | null = null;
let session: SessionPayload | null = null;
let input = new MoveInput([]);
let closeEvents: (() => void) | null = null;
let pollTimer: number | null = null;

function setMessage(text: string, isError = false): void {
  messageLine.textContent = text;
  messageLine.className = isError ? "message error" : "message";
}

function statusText(payload: SessionPayload): string {
  if (payload.status === "finished") {
    const outcome = payload.outcome;
    if (outcome === null || outcome.draw) return "Game over: draw.";
    return outcome.winner === payload.human_side
      ? "Game over: you win!"
      : "Game over: the engine wins.";
  }
  if (payload.status === "ai-thinking") return "Engine is thinking…";
  const phase = parseStateText(payload.state).phase;
  return `Your move (${payload.human_side}, ${phase} phase).`;
}

function lastMoveCells(payload: SessionPayload): Set<string> {
  const last = payload.history[payload.history.length - 1];
  if (last === undefined) return new Set();
  return new Set(parseMoveText(last).path);
}

function redraw(): void {
  if (board === null || session === null) return;
  const humanTurn = session.status === "awaiting-human";
  drawBoard(humanTurn);
  statusLine.textContent = statusText(session);
  statusLine.classList.toggle("thinking", session.status === "ai-thinking");

  passButton.hidden = !(humanTurn && input.canPass());
  const pending = input.pendingText();
  confirmButton.hidden = !(humanTurn && input.needsConfirm());
  confirmButton.textContent = pending === null ? "Play" : `Play ${pending}`;

  historyList.replaceChildren(...session.history.map((text) => {
    const item = document.createElement("li");
    item.textContent = text;
    return item;
  }));

  renderEvaluation();
}

function drawBoard(humanTurn: boolean): void {
  if (board === null || session === null) return;
  const state = parseStateText(session.state);
  const selection = input.selection();
  drawBoardSvg(svg, board, {
    occupancy: state.occupancy,
    selectable: humanTurn && selection.length === 0 ? input.origins() : new Set(),
    selected: selection,
    targets: humanTurn ? input.targets() : new Set(),
    lastMove: lastMoveCells(session),
  }, onCell);
}

function renderEvaluation(): void {
  if (session === null || session.evaluation === null) {
    evaluationBox.hidden = true;
    return;
  }
  evaluationBox.hidden = false;
  const entries = Object.entries(session.evaluation)
    .sort((a, b) => b[1] - a[1]);
  const rows = entries.map(([move, value]) => {
    const row = document.createElement("div");
    row.className = "eval-row";
    row.textContent = `${move}  ${(value * 100).toFixed(1)}%`;
    return row;
  });
  const title = document.createElement("div");
  title.className = "eval-title";
  title.textContent = "Engine evaluation of its last reply";
  evaluationBox.replaceChildren(title, ...rows);
}

function update(payload: SessionPayload): void {
  session = payload;
  input = new MoveInput(
    payload.status === "awaiting-human" ? payload.legal_moves : []);
  if (payload.status !== "ai-thinking") stopPolling();
  redraw();
}

function onCell(id: string): void {
  if (session === null || session.status !== "awaiting-human") return;
  const result = input.click(id);
  if (result.kind === "submit") {
    void submit(result.text);
  } else {
    if (result.kind !== "ignored") setMessage("");
    redraw();
  }
}

async function submit(text: string): Promise<void> {
  if (session === null) return;
  try {
    setMessage("");
    const payload = await api.submitMove(session.id, text);
    update(payload);
    startPollingIfThinking();
  } catch (error) {
    if (error instanceof ApiError) {
      setMessage(error.detail, true);
      input.reset();
      redraw();
    } else {
      setMessage(String(error), true);
    }
  }
}

function stopPolling(): void {
  if (pollTimer !== null) {
    window.clearTimeout(pollTimer);
    pollTimer = null;
  }
}

/** Safety net when the event stream is unavailable. */
function startPollingIfThinking(): void {
  stopPolling();
  if (session === null || session.status !== "ai-thinking") return;
  const id = session.id;
  pollTimer = window.setTimeout(async () => {
    try {
      const payload = await api.getSession(id);
      if (session !== null && session.id === id) {
        update(payload);
        startPollingIfThinking();
      }
    } catch {
      // Next SSE update or user action recovers.
    }
  }, 400);
}

async function newGame(): Promise<void> {
  try {
    setMessage("");
    if (closeEvents !== null) closeEvents();
    const game = gameSelect.value;
    const difficulty = difficultySelect.value === "custom"
      ? { mu: Number(muInput.value), sigma: Number(sigmaInput.value) }
      : difficultySelect.value;
    const [boardText, payload] = await Promise.all([
      api.boardText(game),
      api.createSession({
        game,
        variant: variantSelect.value,
        human_side: sideSelect.value as "P1" | "P2",
        difficulty,
        time_budget: Number(budgetInput.value),
        reveal_evaluations: revealCheckbox.checked,
      }),
    ]);
    board = parseBoard(boardText);
    update(payload);
    closeEvents = api.events(payload.id, update, () => {
      closeEvents = null;
      startPollingIfThinking();
    });
    startPollingIfThinking();
  } catch (error) {
    setMessage(error instanceof ApiError ? error.detail : String(error), true);
  }
}

function syncVariants(): void {
  if (catalog === null) return;
  const info = catalog.games.find((game) => game.id === gameSelect.value);
  const variants = info === undefined ? ["default"] : info.variants;
  variantSelect.replaceChildren(...variants.map((name) => {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    return option;
  }));
}

function syncCustomRow(): void {
  customRow.hidden = difficultySelect.value !== "custom";
}

async function init(): Promise<void> {
  try {
    catalog = await api.catalog();
  } catch (error) {
    setMessage(`Cannot reach the game service: ${String(error)}`, true);
    return;
  }
  gameSelect.replaceChildren(...catalog.games.map((game) => {
    const option = document.createElement("option");
    option.value = game.id;
    option.textContent = game.id;
    return option;
  }));
  const presets = Object.keys(catalog.difficulty_presets);
  difficultySelect.replaceChildren(...[...presets, "custom"].map((name) => {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name === "custom" ? "custom…" : name;
    return option;
  }));
  if (presets.includes("Medium")) difficultySelect.value = "Medium";
  budgetInput.value = String(catalog.default_time_budget);
  syncVariants();
  syncCustomRow();

  gameSelect.addEventListener("change", syncVariants);
  difficultySelect.addEventListener("change", syncCustomRow);
  newGameButton.addEventListener("click", () => void newGame());
  passButton.addEventListener("click", () => {
    const text = input.passText();
    if (text !== null) void submit(text);
  });
  confirmButton.addEventListener("click", () => {
    const result = input.confirm();
    if (result.kind === "submit") void submit(result.text);
  });
}

void init();
