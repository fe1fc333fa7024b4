// DOM veneer: one render function over the controller state, thin handlers.

import { Api, makeApi } from "./api.js";
import { GameController } from "./controller.js";
import { banner, canHint, canSubmit, dVectorLabel, forcedLossNotice } from "./state.js";

export function init(doc: Document, apiBase: string, apiOverride?: Api): GameController {
  const api = apiOverride ?? makeApi(apiBase);
  const ctl = new GameController(api);

  const el = <T extends HTMLElement>(id: string): T => {
    const node = doc.getElementById(id);
    if (node === null) throw new Error(`missing #${id}`);
    return node as T;
  };

  const ringSelect = el<HTMLSelectElement>("ring-select");
  const fieldSelect = el<HTMLSelectElement>("field-select");
  const sideSelect = el<HTMLSelectElement>("side-select");
  const newGame = el<HTMLButtonElement>("new-game");
  const board = el<HTMLElement>("board");
  const moveInput = el<HTMLInputElement>("move-input");
  const submitMove = el<HTMLButtonElement>("submit-move");
  const hintButton = el<HTMLButtonElement>("hint-button");
  const modal = el<HTMLDivElement>("modal");

  function render(): void {
    const s = ctl.state;

    if (ringSelect.options.length === 0 && s.catalog.length > 0) {
      for (const entry of s.catalog) {
        const opt = doc.createElement("option");
        opt.value = entry.id;
        const charNote = entry.char === "any" ? "" : `  [char ${entry.char} only]`;
        opt.textContent = `${entry.id}  rank ${entry.n}${charNote}`;
        ringSelect.appendChild(opt);
      }
    }

    el("error-line").textContent = s.notice ?? "";

    const g = s.game;
    board.hidden = g === null;
    if (g !== null) {
      const entry = s.catalog.find((e) => e.id === g.ring_id);
      el("presentation").textContent = entry ? `${g.ring_id} = ${entry.presentation}` : g.ring_id;
      el("ideal-basis").textContent = g.ideal_basis.length === 0 ? "(0)" : `(${g.ideal_basis.join(", ")})`;
      el("quotient-rank").textContent = String(g.quotient_rank);
      el("d-vector").textContent = dVectorLabel(s);
      el("turn").textContent = g.turn ?? "nobody, the game is over";
      el("engine-move-line").hidden = s.lastEngineMove === null;
      el("engine-move").textContent =
        (s.lastEngineMove ?? "") + (s.engineResigned ? "  (engine is lost and is delaying)" : "");
      el("notice").textContent = forcedLossNotice(s) ?? "";
      el("banner").textContent = banner(s) ?? "";

      const history = el<HTMLOListElement>("history");
      history.textContent = "";
      for (const row of g.history) {
        const li = doc.createElement("li");
        const basis = row.resulting_ideal_basis.join(", ");
        li.textContent = `${row.player} played ${row.move}   ideal: (${basis})`;
        history.appendChild(li);
      }

      const humanTurn = canSubmit(s);
      moveInput.disabled = !humanTurn;
      submitMove.disabled = !humanTurn;
      hintButton.disabled = !canHint(s);
      el("hint-output").textContent =
        s.hint !== null ? `try ${s.hint}` : s.hintMessage !== null ? "no winning move exists" : "";
      el("input-feedback").textContent = s.inputError ?? "";
    }

    modal.hidden = s.modal === null;
    if (s.modal !== null) {
      el("modal-text").textContent =
        `"${s.modal.poly}" is a unit: playing it makes the ideal the whole ring and you lose immediately.`;
    }
    newGame.disabled = s.pending;
  }

  ctl.subscribe(render);

  newGame.addEventListener("click", () => {
    const side = sideSelect.value as "A" | "B" | "none";
    void ctl.newGame(ringSelect.value, Number(fieldSelect.value), side);
  });
  moveInput.addEventListener("input", () => {
    el("input-feedback").textContent = ctl.liveFeedback(moveInput.value) ?? "";
  });
  const submit = (): void => {
    void ctl.submitMove(moveInput.value).then(() => {
      if (ctl.state.inputError === null && ctl.state.modal === null) moveInput.value = "";
    });
  };
  submitMove.addEventListener("click", submit);
  moveInput.addEventListener("keydown", (e) => {
    if ((e as KeyboardEvent).key === "Enter") submit();
  });
  el("modal-confirm").addEventListener("click", () => void ctl.confirmUnitMove());
  el("modal-cancel").addEventListener("click", () => ctl.cancelModal());
  hintButton.addEventListener("click", () => void ctl.requestHint());

  void ctl.loadCatalog().then(render).catch((e) => {
    el("error-line").textContent = `cannot reach the server: ${String(e)}`;
  });

  return ctl;
}

// Auto-start in a real page; tests import init() and drive it themselves.
if (typeof document !== "undefined" && document.getElementById("ring-select") !== null) {
  const base = new URLSearchParams(location.search).get("api") ?? "";
  init(document, base);
}
