import type { Api, CatalogEntry, CreateResult, GameState, MoveResult } from "../src/api.js";

export const R4: CatalogEntry = {
  id: "R_4",
  n: 3,
  d: [2],
  presentation: "K[x,y]/(x^2, x*y, y^2)",
  char: "any",
  win: "B",
};

export const R2: CatalogEntry = {
  id: "R_2",
  n: 2,
  d: [1],
  presentation: "K[x]/(x^2)",
  char: "any",
  win: "A",
};

export const R1: CatalogEntry = {
  id: "R_1",
  n: 1,
  d: [],
  presentation: "K[x]/(x)",
  char: "any",
  win: "B",
};

export function gameState(partial: Partial<GameState>): GameState {
  return {
    ring_id: "R_4",
    field: 2,
    engine_side: "B",
    ideal_basis: [],
    quotient_rank: 3,
    d_vector_of_quotient: [2],
    turn: "A",
    status: "open",
    loser: null,
    history: [],
    ...partial,
  };
}

export const freshR4: CreateResult = {
  game_id: "g1",
  state: gameState({}),
  engine_move: null,
};

/** Server reply to "x+y" on a fresh R_4 game with the engine on B. */
export const afterXplusY: MoveResult = {
  game_id: "g1",
  state: gameState({
    ideal_basis: ["x + y", "x"],
    quotient_rank: 1,
    d_vector_of_quotient: [],
    history: [
      { player: "A", move: "x + y", resulting_ideal_basis: ["x + y"] },
      { player: "B", move: "x", resulting_ideal_basis: ["x + y", "x"] },
    ],
  }),
  was_unit: false,
  engine_move: "x",
  engine_resigned: false,
};

/** Server reply to the forced unit move "1" ending that game. */
export const afterUnit: MoveResult = {
  game_id: "g1",
  state: gameState({
    ideal_basis: ["1", "x + y", "x"],
    quotient_rank: 0,
    d_vector_of_quotient: null,
    turn: null,
    status: "closed",
    loser: "A",
    history: [
      { player: "A", move: "x + y", resulting_ideal_basis: ["x + y"] },
      { player: "B", move: "x", resulting_ideal_basis: ["x + y", "x"] },
      { player: "A", move: "1", resulting_ideal_basis: ["1", "x + y", "x"] },
    ],
  }),
  was_unit: true,
  engine_move: null,
  engine_resigned: null,
};

/** An Api whose every method fails unless overridden. */
export function fakeApi(overrides: Partial<Api>): Api {
  const die = (name: string) => () => {
    throw new Error(`unexpected api call: ${name}`);
  };
  return {
    catalog: die("catalog"),
    createGame: die("createGame"),
    getGame: die("getGame"),
    move: die("move"),
    hint: die("hint"),
    ...overrides,
  };
}
