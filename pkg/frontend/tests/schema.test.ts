import { describe, expect, it } from "vitest";
import {
  errorDetail,
  parseCatalog,
  parseSession,
  SchemaError,
} from "../src/schema.js";

const CATALOG = {
  games: [
    { id: "tictactoe", variants: ["default"] },
    { id: "tapatan", variants: ["default", "ludii"] },
  ],
  difficulty_presets: {
    Easy: { mu: 0.4, sigma: 0.3 },
    Hard: { mu: 1.0, sigma: 0.3 },
  },
  default_time_budget: 1.0,
};

const SESSION = {
  id: "abc123",
  game: "tictactoe",
  variant: "default",
  status: "awaiting-human",
  state: "game: tictactoe\noccupancy: -\nto_move: P1\nphase: main\nply_count: 0\n",
  to_move: "P1",
  plies: 0,
  legal_moves: ["a1", "b2"],
  outcome: null,
  human_side: "P1",
  difficulty: { name: "Medium", mu: 0.6, sigma: 0.3 },
  time_budget: 1.0,
  history: [],
  evaluation: null,
};

describe("parseCatalog", () => {
  it("accepts a well-formed catalog", () => {
    const catalog = parseCatalog(CATALOG);
    expect(catalog.games.map((g) => g.id)).toEqual(["tictactoe", "tapatan"]);
    expect(catalog.difficulty_presets.Easy).toEqual({ mu: 0.4, sigma: 0.3 });
    expect(catalog.default_time_budget).toBe(1.0);
  });

  it("names the failing path", () => {
    expect(() => parseCatalog({ ...CATALOG, games: "nope" }))
      .toThrow(/catalog\.games: expected an array, got string/);
    expect(() => parseCatalog({
      ...CATALOG,
      difficulty_presets: { Easy: { mu: "high", sigma: 0.3 } },
    })).toThrow(/difficulty_presets\.Easy\.mu: expected a number/);
    expect(() => parseCatalog(null)).toThrow(SchemaError);
  });
});

describe("parseSession", () => {
  it("accepts a fresh session", () => {
    const session = parseSession(SESSION);
    expect(session.status).toBe("awaiting-human");
    expect(session.legal_moves).toEqual(["a1", "b2"]);
    expect(session.outcome).toBeNull();
    expect(session.evaluation).toBeNull();
    expect(session.difficulty).toEqual({ name: "Medium", mu: 0.6, sigma: 0.3 });
  });

  it("accepts finished sessions with outcomes and evaluations", () => {
    const session = parseSession({
      ...SESSION,
      status: "finished",
      outcome: { winner: "P2", draw: false },
      difficulty: { name: null, mu: 0.8, sigma: 0.2 },
      evaluation: { a1: 0.5, b2: 0.625 },
    });
    expect(session.outcome).toEqual({ winner: "P2", draw: false });
    expect(session.difficulty.name).toBeNull();
    expect(session.evaluation).toEqual({ a1: 0.5, b2: 0.625 });
  });

  it("accepts drawn outcomes with a null winner", () => {
    const session = parseSession({
      ...SESSION, status: "finished", outcome: { winner: null, draw: true },
    });
    expect(session.outcome).toEqual({ winner: null, draw: true });
  });

  it("rejects unknown statuses", () => {
    expect(() => parseSession({ ...SESSION, status: "pondering" }))
      .toThrow(/session\.status/);
  });

  it("rejects wrong move list and side types", () => {
    expect(() => parseSession({ ...SESSION, legal_moves: [1, 2] }))
      .toThrow(/legal_moves\[0\]: expected a string/);
    expect(() => parseSession({ ...SESSION, to_move: "white" }))
      .toThrow(/session\.to_move/);
  });

  it("rejects missing fields and bad evaluations", () => {
    const { plies: _dropped, ...withoutPlies } = SESSION;
    expect(() => parseSession(withoutPlies)).toThrow(/session\.plies/);
    expect(() => parseSession({ ...SESSION, evaluation: { a1: "good" } }))
      .toThrow(/evaluation\.a1: expected a number/);
  });
});

describe("errorDetail", () => {
  it("pulls the detail string from service errors", () => {
    expect(errorDetail({ detail: "position occupied" }, "x"))
      .toBe("position occupied");
  });

  it("falls back for other bodies", () => {
    expect(errorDetail(null, "422 Unprocessable")).toBe("422 Unprocessable");
    expect(errorDetail({ detail: 5 }, "f")).toBe("f");
    expect(errorDetail("oops", "f")).toBe("f");
  });
});
