/** Typed fetch client for the session service. */

import {
  errorDetail,
  parseCatalog,
  parseSession,
  type Catalog,
  type SessionPayload,
} from "./schema.js";

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

export interface CreateSessionRequest {
  game: string;
  variant: string;
  human_side: "P1" | "P2";
  difficulty: string | { mu: number; sigma: number };
  time_budget?: number;
  reveal_evaluations?: boolean;
  seed?: number;
}

async function readBody(response: Response): Promise<unknown> {
  try {
    return await response.json();
  } catch {
    return null;
  }
}

export class ApiClient {
  constructor(private base: string = "") {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const response = await fetch(this.base + path, init);
    const body = await readBody(response);
    if (!response.ok) {
      throw new ApiError(response.status,
        errorDetail(body, `${response.status} ${response.statusText}`));
    }
    return body;
  }

  async catalog(): Promise<Catalog> {
    return parseCatalog(await this.request("/games"));
  }

  async boardText(game: string): Promise<string> {
    const response = await fetch(`${this.base}/games/${game}/board`);
    if (!response.ok) {
      throw new ApiError(response.status, `no board for ${game}`);
    }
    return response.text();
  }

  async createSession(body: CreateSessionRequest): Promise<SessionPayload> {
    return parseSession(await this.request("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    }));
  }

  async getSession(id: string): Promise<SessionPayload> {
    return parseSession(await this.request(`/sessions/${id}`));
  }

  async submitMove(id: string, move: string): Promise<SessionPayload> {
    return parseSession(await this.request(`/sessions/${id}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ move }),
    }));
  }

  /**
   * Subscribe to session updates over server-sent events. Returns a
   * close function. On stream failure the caller's onError runs once
   * and the stream is closed (the app falls back to polling).
   */
  events(
    id: string,
    onUpdate: (payload: SessionPayload) => void,
    onError: (error: Error) => void,
  ): () => void {
    const source = new EventSource(`${this.base}/sessions/${id}/events`);
    source.addEventListener("update", (event) => {
      try {
        onUpdate(parseSession(JSON.parse((event as MessageEvent).data)));
      } catch (error) {
        source.close();
        onError(error instanceof Error ? error : new Error(String(error)));
      }
    });
    source.onerror = () => {
      // EventSource retries on transient errors; only a closed source
      // is fatal. The server closes the stream after a finished game.
      if (source.readyState === EventSource.CLOSED) {
        onError(new Error("event stream closed"));
      }
    };
    return () => source.close();
  }
}
