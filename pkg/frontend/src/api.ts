// Thin JSON client for the game service. All state lives server-side; this
// module only shuttles requests and maps error payloads onto ApiError.

export interface MoveJson {
  vector: number[];
  k: number;
}

export interface HistoryEntryJson {
  mover: "human" | "engine";
  move: MoveJson;
  position: number[];
}

export interface SessionJson {
  id: string;
  n: number;
  start: number[];
  position: number[];
  status: "human-to-move" | "engine-to-move" | "finished";
  winner: "human" | "engine" | null;
  history: HistoryEntryJson[];
}

export interface VerdictJson {
  is_p: boolean;
  nim_sum: number;
}

export interface SpongeJson {
  n: number;
  m: number;
  points: number[][];
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

async function parseDetail(resp: Response): Promise<string> {
  try {
    const body = await resp.json();
    if (body && typeof body.detail === "string") return body.detail;
  } catch {
    // non-JSON error body; fall through to the status line
  }
  return `request failed with status ${resp.status}`;
}

export class ApiClient {
  constructor(private base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await fetch(this.base + path, init);
    if (!resp.ok) {
      throw new ApiError(resp.status, await parseDetail(resp));
    }
    return (await resp.json()) as T;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  verdict(pos: number[]): Promise<VerdictJson> {
    return this.request(`/api/verdict?pos=${pos.join(",")}`);
  }

  createSession(n: number, start: number[], humanFirst: boolean): Promise<SessionJson> {
    return this.post("/api/session", { n, start, human_first: humanFirst });
  }

  playMove(sessionId: string, vector: number[], k: number): Promise<SessionJson> {
    return this.post(`/api/session/${sessionId}/move`, { vector, k });
  }

  getSession(sessionId: string): Promise<SessionJson> {
    return this.request(`/api/session/${sessionId}`);
  }

  hints(sessionId: string): Promise<MoveJson[]> {
    return this.request(`/api/session/${sessionId}/hints`);
  }

  sponge(n: number, m: number): Promise<SpongeJson> {
    return this.request(`/api/sponge?n=${n}&m=${m}`);
  }
}
