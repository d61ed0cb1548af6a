import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("queries verdicts with comma-joined positions", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse({ is_p: true, nim_sum: 0 }));
    vi.stubGlobal("fetch", fetchMock);

    const verdict = await new ApiClient().verdict([1, 2, 3]);
    expect(verdict).toEqual({ is_p: true, nim_sum: 0 });
    expect(fetchMock).toHaveBeenCalledWith("/api/verdict?pos=1,2,3", undefined);
  });

  it("posts session creation bodies in the wire schema", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse({ id: "abc" }));
    vi.stubGlobal("fetch", fetchMock);

    await new ApiClient().createSession(3, [7, 5, 6], false);
    const [path, init] = fetchMock.mock.calls[0];
    expect(path).toBe("/api/session");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body)).toEqual({ n: 3, start: [7, 5, 6], human_first: false });
  });

  it("posts moves to the session endpoint", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse({ id: "abc" }));
    vi.stubGlobal("fetch", fetchMock);

    await new ApiClient().playMove("abc", [1, 0, 0], 4);
    const [path, init] = fetchMock.mock.calls[0];
    expect(path).toBe("/api/session/abc/move");
    expect(JSON.parse(init.body)).toEqual({ vector: [1, 0, 0], k: 4 });
  });

  it("prefixes a configured base URL", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse([]));
    vi.stubGlobal("fetch", fetchMock);

    await new ApiClient("http://127.0.0.1:8080").hints("xyz");
    expect(fetchMock.mock.calls[0][0]).toBe("http://127.0.0.1:8080/api/session/xyz/hints");
  });

  it("maps error payloads onto ApiError with the server detail", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValue(jsonResponse({ detail: "not the human's turn" }, 409));
    vi.stubGlobal("fetch", fetchMock);

    const err = await new ApiClient()
      .playMove("abc", [1, 0, 0], 1)
      .catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(409);
    expect((err as ApiError).message).toBe("not the human's turn");
  });

  it("falls back to the status code when the error body is not JSON", async () => {
    const fetchMock = vi.fn().mockResolvedValue(new Response("boom", { status: 500 }));
    vi.stubGlobal("fetch", fetchMock);

    const err = await new ApiClient().sponge(3, 4).catch((e: unknown) => e);
    expect((err as ApiError).status).toBe(500);
    expect((err as ApiError).message).toContain("500");
  });

  it("requests sponge levels by n and m", async () => {
    const fetchMock = vi
      .fn()
      .mockResolvedValue(jsonResponse({ n: 3, m: 2, points: [] }));
    vi.stubGlobal("fetch", fetchMock);

    await new ApiClient().sponge(3, 2);
    expect(fetchMock.mock.calls[0][0]).toBe("/api/sponge?n=3&m=2");
  });
});
