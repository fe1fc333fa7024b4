import { describe, expect, test } from "vitest";
import { ApiError } from "../src/api.js";
import type { MoveResult } from "../src/api.js";
import { GameController } from "../src/controller.js";
import { R1, R2, R4, afterUnit, afterXplusY, fakeApi, freshR4 } from "./helpers.js";

async function freshGame(moveImpl?: (gameId: string, poly: string) => Promise<MoveResult>) {
  const calls: string[] = [];
  const ctl = new GameController(
    fakeApi({
      catalog: () => Promise.resolve({ entries: [R1, R2, R4] }),
      createGame: () => Promise.resolve(freshR4),
      move: (gameId, poly) => {
        calls.push(poly);
        return moveImpl ? moveImpl(gameId, poly) : Promise.resolve(afterXplusY);
      },
    }),
  );
  await ctl.loadCatalog();
  await ctl.newGame("R_4", 2, "B");
  return { ctl, calls };
}

describe("submit flow", () => {
  test("parse errors never reach the network", async () => {
    const { ctl, calls } = await freshGame();
    await ctl.submitMove("(x+y)^2");
    expect(calls).toEqual([]);
    expect(ctl.state.inputError).toMatch(/parse error at 5/);
  });

  test("unknown variables never reach the network", async () => {
    const { ctl, calls } = await freshGame();
    await ctl.submitMove("x + w");
    expect(calls).toEqual([]);
    expect(ctl.state.inputError).toBe('unknown variable "w"');
  });

  test("a unit move is held behind the modal until confirmed", async () => {
    const { ctl, calls } = await freshGame(() => Promise.resolve(afterUnit));
    await ctl.submitMove("1");
    expect(calls).toEqual([]);
    expect(ctl.state.modal).toEqual({ poly: "1" });
    await ctl.confirmUnitMove();
    expect(calls).toEqual(["1"]);
    expect(ctl.state.game?.status).toBe("closed");
    expect(ctl.state.game?.loser).toBe("A");
  });

  test("cancelling the modal sends nothing", async () => {
    const { ctl, calls } = await freshGame();
    await ctl.submitMove("x + 1");
    ctl.cancelModal();
    expect(ctl.state.modal).toBeNull();
    expect(calls).toEqual([]);
  });

  test("a normal move posts and applies the reply verbatim", async () => {
    const { ctl, calls } = await freshGame();
    await ctl.submitMove("x+y");
    expect(calls).toEqual(["x+y"]);
    expect(ctl.state.game).toBe(afterXplusY.state);
    expect(ctl.state.lastEngineMove).toBe("x");
  });

  test("only one request is in flight per game", async () => {
    let release: (r: MoveResult) => void = () => {};
    const { ctl, calls } = await freshGame(
      () => new Promise<MoveResult>((resolve) => (release = resolve)),
    );
    const first = ctl.submitMove("x");
    await ctl.submitMove("y");
    expect(calls).toEqual(["x"]);
    release(afterXplusY);
    await first;
    expect(ctl.state.pending).toBe(false);
  });

  test("server rejections land in the notice line", async () => {
    const { ctl } = await freshGame(() => Promise.reject(new ApiError(400, "illegal_move", "zero is not a move")));
    await ctl.submitMove("x+y");
    expect(ctl.state.notice).toBe("illegal_move: zero is not a move");
    expect(ctl.state.pending).toBe(false);
  });
});

describe("game creation", () => {
  test("characteristic mismatch is surfaced verbatim", async () => {
    const ctl = new GameController(
      fakeApi({
        createGame: () => Promise.reject(new ApiError(400, "char_mismatch", "only characteristic 3")),
      }),
    );
    await ctl.newGame("R_25,**", 2, "none");
    expect(ctl.state.notice).toBe("char_mismatch: only characteristic 3");
    expect(ctl.state.game).toBeNull();
  });

  test("an engine on A moves before the human sees the board", async () => {
    const created = {
      game_id: "g9",
      state: {
        ...freshR4.state,
        ring_id: "R_2",
        ideal_basis: ["x"],
        quotient_rank: 1,
        turn: "B" as const,
        engine_side: "A" as const,
        history: [{ player: "A" as const, move: "x", resulting_ideal_basis: ["x"] }],
      },
      engine_move: "x",
    };
    const ctl = new GameController(fakeApi({ createGame: () => Promise.resolve(created) }));
    await ctl.newGame("R_2", 2, "A");
    expect(ctl.state.lastEngineMove).toBe("x");
    expect(ctl.state.game?.turn).toBe("B");
  });
});

describe("hints", () => {
  test("closed games never ask for a hint", async () => {
    // the fake api throws on any hint call, so passing means the gate held
    const { ctl } = await freshGame(() => Promise.resolve(afterUnit));
    await ctl.submitMove("x+y");
    expect(ctl.state.game?.status).toBe("closed");
    await ctl.requestHint();
    expect(ctl.state.pending).toBe(false);
    expect(ctl.state.hint).toBeNull();
  });

  test("a live hint is stored", async () => {
    const { ctl } = await freshGame();
    const ctlWithHint = new GameController(
      fakeApi({
        catalog: () => Promise.resolve({ entries: [R2] }),
        createGame: () => Promise.resolve({ ...freshR4, state: { ...freshR4.state, ring_id: "R_2", engine_side: null } }),
        hint: () => Promise.resolve({ hint: "x" }),
      }),
    );
    await ctlWithHint.loadCatalog();
    await ctlWithHint.newGame("R_2", 2, "none");
    await ctlWithHint.requestHint();
    expect(ctlWithHint.state.hint).toBe("x");
    expect(ctl.state.hint).toBeNull();
  });
});

describe("live feedback", () => {
  test("mirrors the grammar without calling the server", async () => {
    const { ctl, calls } = await freshGame();
    expect(ctl.liveFeedback("")).toBeNull();
    expect(ctl.liveFeedback("x + y")).toBeNull();
    expect(ctl.liveFeedback("xy")).toBe('unknown variable "xy"');
    expect(ctl.liveFeedback("(x+y)^2")).toMatch(/parse error at 5/);
    expect(calls).toEqual([]);
  });
});
