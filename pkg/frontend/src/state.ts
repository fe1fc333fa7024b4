// App state and its reducer. Every algebraic fact displayed (ideal basis,
// quotient rank, d-vector, turn, loser) is copied verbatim from a server
// response; the reducer only routes and never recomputes any of it.
// One request may be in flight per game, so every network-bound event is
// gated on `pending`.

import type { CatalogEntry, GameState, HintResult, MoveResult } from "./api.js";

export interface ModalState {
  poly: string;
}

export interface AppState {
  catalog: CatalogEntry[];
  gameId: string | null;
  game: GameState | null;
  lastEngineMove: string | null;
  engineResigned: boolean;
  pending: boolean;
  modal: ModalState | null;
  inputError: string | null;
  hint: string | null;
  hintMessage: string | null;
  notice: string | null;
}

export const initialState: AppState = {
  catalog: [],
  gameId: null,
  game: null,
  lastEngineMove: null,
  engineResigned: false,
  pending: false,
  modal: null,
  inputError: null,
  hint: null,
  hintMessage: null,
  notice: null,
};

export type Event =
  | { type: "catalog_loaded"; entries: CatalogEntry[] }
  | { type: "request_started" }
  | { type: "game_created"; gameId: string; state: GameState; engineMove: string | null }
  | { type: "move_applied"; result: MoveResult }
  | { type: "hint_loaded"; result: HintResult }
  | { type: "request_failed"; code: string; message: string }
  | { type: "unit_warning"; poly: string }
  | { type: "modal_cancelled" }
  | { type: "input_feedback"; error: string | null };

export function reduce(s: AppState, e: Event): AppState {
  switch (e.type) {
    case "catalog_loaded":
      return { ...s, catalog: e.entries };
    case "request_started":
      if (s.pending) return s;
      return { ...s, pending: true, notice: null };
    case "game_created":
      return {
        ...initialState,
        catalog: s.catalog,
        gameId: e.gameId,
        game: e.state,
        lastEngineMove: e.engineMove,
      };
    case "move_applied":
      return {
        ...s,
        pending: false,
        modal: null,
        game: e.result.state,
        lastEngineMove: e.result.engine_move,
        engineResigned: e.result.engine_resigned === true,
        hint: null,
        hintMessage: null,
        inputError: null,
      };
    case "hint_loaded":
      return {
        ...s,
        pending: false,
        hint: e.result.hint,
        hintMessage: e.result.message ?? null,
      };
    case "request_failed":
      return { ...s, pending: false, modal: null, notice: `${e.code}: ${e.message}` };
    case "unit_warning":
      return { ...s, modal: { poly: e.poly } };
    case "modal_cancelled":
      return { ...s, modal: null };
    case "input_feedback":
      return { ...s, inputError: e.error };
  }
}

/** Submitting is allowed only in an open game, on the human's turn, with the wire free. */
export function canSubmit(s: AppState): boolean {
  return (
    s.game !== null &&
    s.game.status === "open" &&
    !s.pending &&
    s.modal === null &&
    s.game.turn !== null &&
    s.game.turn !== s.game.engine_side
  );
}

export function canHint(s: AppState): boolean {
  return s.game !== null && s.game.status === "open" && !s.pending;
}

/** Win/loss banner for a finished game, or null while it is open. */
export function banner(s: AppState): string | null {
  if (s.game === null || s.game.status !== "closed") return null;
  const engine = s.game.engine_side;
  const loser = s.game.loser;
  if (loser === null) return "game over";
  if (engine === null) return `game over: player ${loser} made the ideal the whole ring and loses`;
  return loser === engine ? "game over: the engine loses, you win" : "game over: you made the ideal the whole ring and lose";
}

/**
 * Standing warning for open positions where any move ends the game. The
 * quotient rank is the server's number; rank 1 means the ideal is maximal,
 * so every enlargement reaches the whole ring.
 */
export function forcedLossNotice(s: AppState): string | null {
  if (s.game === null || s.game.status !== "open") return null;
  if (s.game.quotient_rank === 1) return "any move loses: the next generator makes the ideal the whole ring";
  return null;
}

/** The shrinking-board indicator: the server-reported d-vector, rendered. */
export function dVectorLabel(s: AppState): string {
  const d = s.game?.d_vector_of_quotient;
  if (d == null) return "n/a";
  return d.length === 0 ? "()" : `(${d.join(", ")})`;
}
