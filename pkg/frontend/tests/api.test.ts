import { describe, expect, test } from "vitest";
import { ApiError, makeApi } from "../src/api.js";

interface Captured {
  url: string;
  init?: RequestInit;
}

function capture(status: number, body: unknown): { api: ReturnType<typeof makeApi>; calls: Captured[] } {
  const calls: Captured[] = [];
  const api = makeApi("http://h:1", (url, init) => {
    calls.push({ url, init });
    return Promise.resolve(
      new Response(JSON.stringify(body), {
        status,
        headers: { "content-type": "application/json" },
      }),
    );
  });
  return { api, calls };
}

describe("request shapes", () => {
  test("catalog GETs /catalog", async () => {
    const { api, calls } = capture(200, { entries: [] });
    await api.catalog();
    expect(calls[0]?.url).toBe("http://h:1/catalog");
    expect(calls[0]?.init).toBeUndefined();
  });

  test("createGame POSTs ring_id, field, engine_side", async () => {
    const { api, calls } = capture(200, { game_id: "g", state: {}, engine_move: null });
    await api.createGame("R_4", 2, "B");
    expect(calls[0]?.url).toBe("http://h:1/games");
    expect(calls[0]?.init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0]?.init?.body))).toEqual({
      ring_id: "R_4",
      field: 2,
      engine_side: "B",
    });
  });

  test("move POSTs poly to the game's moves collection", async () => {
    const { api, calls } = capture(200, { game_id: "g", state: {}, was_unit: false, engine_move: null, engine_resigned: null });
    await api.move("abc123", "x + y");
    expect(calls[0]?.url).toBe("http://h:1/games/abc123/moves");
    expect(JSON.parse(String(calls[0]?.init?.body))).toEqual({ poly: "x + y" });
  });

  test("hint and getGame GET their game", async () => {
    const { api, calls } = capture(200, { hint: "x" });
    await api.hint("abc123");
    expect(calls[0]?.url).toBe("http://h:1/games/abc123/hint");
  });

  test("trailing slash on the base is tolerated", async () => {
    const calls: Captured[] = [];
    const api = makeApi("http://h:1/", (url, init) => {
      calls.push({ url, init });
      return Promise.resolve(new Response("{\"entries\":[]}", { status: 200 }));
    });
    await api.catalog();
    expect(calls[0]?.url).toBe("http://h:1/catalog");
  });
});

describe("error envelopes", () => {
  test("domain errors carry the server's code and message", async () => {
    const { api } = capture(400, { code: "char_mismatch", message: "R_25,** needs characteristic 3" });
    const err = await api.createGame("R_25,**", 2, "none").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    const apiErr = err as ApiError;
    expect(apiErr.status).toBe(400);
    expect(apiErr.code).toBe("char_mismatch");
    expect(apiErr.message).toBe("R_25,** needs characteristic 3");
  });

  test("validation errors (detail array) still raise ApiError", async () => {
    const { api } = capture(422, { detail: [{ loc: ["body", "poly"], msg: "Field required" }] });
    const err = await api.move("g", "x").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).code).toBe("http_error");
    expect((err as ApiError).message).toContain("Field required");
  });

  test("non-JSON error bodies keep the status line", async () => {
    const api = makeApi("http://h:1", () =>
      Promise.resolve(new Response("boom", { status: 502, statusText: "Bad Gateway" })),
    );
    const err = await api.catalog().catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(502);
    expect((err as ApiError).message).toContain("502");
  });
});
