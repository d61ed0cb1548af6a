// Game-screen controller: owns the session state received from the server
// and nothing else. Every displayed position comes verbatim from the last
// server response; rejected moves leave the state untouched and set an
// inline error message instead.

import { ApiError, MoveJson, SessionJson } from "./api.js";
import { isLegalMove } from "./rules.js";

export interface GameApi {
  createSession(n: number, start: number[], humanFirst: boolean): Promise<SessionJson>;
  playMove(sessionId: string, vector: number[], k: number): Promise<SessionJson>;
  hints(sessionId: string): Promise<MoveJson[]>;
}

export interface GameState {
  session: SessionJson | null;
  hints: MoveJson[] | null; // null = not requested for this position
  error: string | null;
  busy: boolean;
}

type Listener = (state: GameState) => void;

export class GameController {
  private state: GameState = { session: null, hints: null, error: null, busy: false };
  private listeners: Listener[] = [];

  constructor(private api: GameApi) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
    listener(this.state);
  }

  getState(): GameState {
    return this.state;
  }

  private update(patch: Partial<GameState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  private fail(err: unknown): void {
    const message = err instanceof ApiError ? err.message : `${err}`;
    this.update({ error: message, busy: false });
  }

  async newGame(n: number, start: number[], humanFirst: boolean): Promise<void> {
    if (start.length !== n || start.some((x) => !Number.isInteger(x) || x < 0)) {
      this.update({ error: "start must be non-negative integers, one per heap" });
      return;
    }
    this.update({ busy: true, error: null, hints: null });
    try {
      const session = await this.api.createSession(n, start, humanFirst);
      this.update({ session, hints: null, error: null, busy: false });
    } catch (err) {
      this.fail(err);
    }
  }

  async submitMove(vector: number[], k: number): Promise<void> {
    const session = this.state.session;
    if (!session) {
      this.update({ error: "no game in progress" });
      return;
    }
    if (session.status !== "human-to-move") {
      this.update({ error: "not your turn" });
      return;
    }
    // arithmetic pre-check: never send a move the server must 422
    if (!isLegalMove(session.position, vector, k)) {
      this.update({ error: "illegal move: heaps cannot go negative and k must be >= 1" });
      return;
    }
    this.update({ busy: true, error: null });
    try {
      const next = await this.api.playMove(session.id, vector, k);
      this.update({ session: next, hints: null, error: null, busy: false });
    } catch (err) {
      this.fail(err); // 409/422 shown inline; session state stays as-is
    }
  }

  async requestHints(): Promise<void> {
    const session = this.state.session;
    if (!session) return;
    this.update({ busy: true, error: null });
    try {
      const hints = await this.api.hints(session.id);
      this.update({ hints, busy: false });
    } catch (err) {
      this.fail(err);
    }
  }

  clearHints(): void {
    this.update({ hints: null });
  }
}
