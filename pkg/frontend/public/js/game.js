// Game-screen controller: owns the session state received from the server
// and nothing else. Every displayed position comes verbatim from the last
// server response; rejected moves leave the state untouched and set an
// inline error message instead.
import { ApiError } from "./api.js";
import { isLegalMove } from "./rules.js";
export class GameController {
    constructor(api) {
        this.api = api;
        this.state = { session: null, hints: null, error: null, busy: false };
        this.listeners = [];
    }
    subscribe(listener) {
        this.listeners.push(listener);
        listener(this.state);
    }
    getState() {
        return this.state;
    }
    update(patch) {
        this.state = { ...this.state, ...patch };
        for (const listener of this.listeners)
            listener(this.state);
    }
    fail(err) {
        const message = err instanceof ApiError ? err.message : `${err}`;
        this.update({ error: message, busy: false });
    }
    async newGame(n, start, humanFirst) {
        if (start.length !== n || start.some((x) => !Number.isInteger(x) || x < 0)) {
            this.update({ error: "start must be non-negative integers, one per heap" });
            return;
        }
        this.update({ busy: true, error: null, hints: null });
        try {
            const session = await this.api.createSession(n, start, humanFirst);
            this.update({ session, hints: null, error: null, busy: false });
        }
        catch (err) {
            this.fail(err);
        }
    }
    async submitMove(vector, k) {
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
        }
        catch (err) {
            this.fail(err); // 409/422 shown inline; session state stays as-is
        }
    }
    async requestHints() {
        const session = this.state.session;
        if (!session)
            return;
        this.update({ busy: true, error: null });
        try {
            const hints = await this.api.hints(session.id);
            this.update({ hints, busy: false });
        }
        catch (err) {
            this.fail(err);
        }
    }
    clearHints() {
        this.update({ hints: null });
    }
}
