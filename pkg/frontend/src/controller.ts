// Glue between the API client and the reducer. The DOM layer and the tests
// both drive the app through this class, so the submit flow (mirror parse,
// unit confirmation, single in-flight request) is exercised end to end
// without a browser.

import { Api, ApiError } from "./api.js";
import { constantTerm, parseExpr, presentationVariables, unknownVariable } from "./parser.js";
import { AppState, Event, canHint, canSubmit, initialState, reduce } from "./state.js";

export class GameController {
  private s: AppState = initialState;
  private listeners: Array<() => void> = [];

  constructor(private readonly api: Api) {}

  get state(): AppState {
    return this.s;
  }

  subscribe(fn: () => void): void {
    this.listeners.push(fn);
  }

  private dispatch(e: Event): void {
    this.s = reduce(this.s, e);
    for (const fn of this.listeners) fn();
  }

  async loadCatalog(): Promise<void> {
    const cat = await this.api.catalog();
    this.dispatch({ type: "catalog_loaded", entries: cat.entries });
  }

  async newGame(ringId: string, field: number, engineSide: "A" | "B" | "none"): Promise<void> {
    if (this.s.pending) return;
    this.dispatch({ type: "request_started" });
    try {
      const r = await this.api.createGame(ringId, field, engineSide);
      this.dispatch({ type: "game_created", gameId: r.game_id, state: r.state, engineMove: r.engine_move });
    } catch (e) {
      this.fail(e);
    }
  }

  /** Variables of the current ring, for the mirror parser's feedback. */
  private ringVariables(): string[] {
    const g = this.s.game;
    if (g === null) return [];
    if (g.ring_id.startsWith("K[")) return presentationVariables(g.ring_id);
    const entry = this.s.catalog.find((e) => e.id === g.ring_id);
    return entry ? presentationVariables(entry.presentation) : [];
  }

  /** Inline feedback for the move input; null means the text looks sendable. */
  liveFeedback(text: string): string | null {
    if (text.trim() === "") return null;
    const parsed = parseExpr(text);
    if (!parsed.ok) return `parse error at ${parsed.pos}: ${parsed.message}`;
    const vars = this.ringVariables();
    if (vars.length > 0) {
      const bad = unknownVariable(parsed.ast, vars);
      if (bad !== null) return `unknown variable "${bad.name}"`;
    }
    return null;
  }

  /**
   * Submit a move typed by the human. A move whose constant term is nonzero
   * is held behind a confirmation modal instead of being sent, since it ends
   * the game at once.
   */
  async submitMove(text: string): Promise<void> {
    if (!canSubmit(this.s)) return;
    const feedback = this.liveFeedback(text);
    if (feedback !== null || text.trim() === "") {
      this.dispatch({ type: "input_feedback", error: feedback ?? "enter a move" });
      return;
    }
    const parsed = parseExpr(text);
    if (parsed.ok && this.s.game !== null && constantTerm(parsed.ast, this.s.game.field) !== 0) {
      this.dispatch({ type: "unit_warning", poly: text });
      return;
    }
    await this.post(text);
  }

  async confirmUnitMove(): Promise<void> {
    const modal = this.s.modal;
    if (modal === null || this.s.pending) return;
    await this.post(modal.poly);
  }

  cancelModal(): void {
    this.dispatch({ type: "modal_cancelled" });
  }

  private async post(poly: string): Promise<void> {
    const gameId = this.s.gameId;
    if (gameId === null) return;
    this.dispatch({ type: "request_started" });
    try {
      const r = await this.api.move(gameId, poly);
      this.dispatch({ type: "move_applied", result: r });
    } catch (e) {
      this.fail(e);
    }
  }

  async requestHint(): Promise<void> {
    if (!canHint(this.s) || this.s.gameId === null) return;
    this.dispatch({ type: "request_started" });
    try {
      const r = await this.api.hint(this.s.gameId);
      this.dispatch({ type: "hint_loaded", result: r });
    } catch (e) {
      this.fail(e);
    }
  }

  private fail(e: unknown): void {
    if (e instanceof ApiError) {
      this.dispatch({ type: "request_failed", code: e.code, message: e.message });
    } else {
      this.dispatch({ type: "request_failed", code: "network_error", message: String(e) });
    }
  }
}
