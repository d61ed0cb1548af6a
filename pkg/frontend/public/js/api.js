// Thin JSON client for the game service. All state lives server-side; this
// module only shuttles requests and maps error payloads onto ApiError.
export class ApiError extends Error {
    constructor(status, detail) {
        super(detail);
        this.status = status;
        this.name = "ApiError";
    }
}
async function parseDetail(resp) {
    try {
        const body = await resp.json();
        if (body && typeof body.detail === "string")
            return body.detail;
    }
    catch {
        // non-JSON error body; fall through to the status line
    }
    return `request failed with status ${resp.status}`;
}
export class ApiClient {
    constructor(base = "") {
        this.base = base;
    }
    async request(path, init) {
        const resp = await fetch(this.base + path, init);
        if (!resp.ok) {
            throw new ApiError(resp.status, await parseDetail(resp));
        }
        return (await resp.json());
    }
    post(path, body) {
        return this.request(path, {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(body),
        });
    }
    verdict(pos) {
        return this.request(`/api/verdict?pos=${pos.join(",")}`);
    }
    createSession(n, start, humanFirst) {
        return this.post("/api/session", { n, start, human_first: humanFirst });
    }
    playMove(sessionId, vector, k) {
        return this.post(`/api/session/${sessionId}/move`, { vector, k });
    }
    getSession(sessionId) {
        return this.request(`/api/session/${sessionId}`);
    }
    hints(sessionId) {
        return this.request(`/api/session/${sessionId}/hints`);
    }
    sponge(n, m) {
        return this.request(`/api/sponge?n=${n}&m=${m}`);
    }
}
