// Typed client for the game server. Response shapes mirror the server's
// JSON verbatim; nothing algebraic is computed on this side.

export interface CatalogEntry {
  id: string;
  n: number;
  d: number[];
  presentation: string;
  char: string;
  win: "A" | "B";
}

export interface Catalog {
  entries: CatalogEntry[];
}

export interface HistoryRow {
  player: "A" | "B";
  move: string;
  resulting_ideal_basis: string[];
}

export interface GameState {
  ring_id: string;
  field: number;
  engine_side: "A" | "B" | null;
  ideal_basis: string[];
  quotient_rank: number;
  d_vector_of_quotient: number[] | null;
  turn: "A" | "B" | null;
  status: "open" | "closed";
  loser: "A" | "B" | null;
  history: HistoryRow[];
}

export interface CreateResult {
  game_id: string;
  state: GameState;
  engine_move: string | null;
}

export interface MoveResult {
  game_id: string;
  state: GameState;
  was_unit: boolean;
  engine_move: string | null;
  engine_resigned: boolean | null;
}

export interface HintResult {
  hint: string | null;
  message?: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function request<T>(fetchFn: FetchLike, url: string, init?: RequestInit): Promise<T> {
  const res = await fetchFn(url, init);
  if (!res.ok) {
    let code = "http_error";
    let message = `${res.status} ${res.statusText}`;
    try {
      const body = (await res.json()) as { code?: string; message?: string; detail?: unknown };
      if (typeof body.code === "string") code = body.code;
      if (typeof body.message === "string") message = body.message;
      // request-validation failures come back as {detail: [...]} instead
      else if (body.detail !== undefined) message = JSON.stringify(body.detail);
    } catch {
      // non-JSON error body; keep the status line
    }
    throw new ApiError(res.status, code, message);
  }
  return (await res.json()) as T;
}

export interface Api {
  catalog(): Promise<Catalog>;
  createGame(ringId: string, field: number, engineSide: "A" | "B" | "none"): Promise<CreateResult>;
  getGame(gameId: string): Promise<{ game_id: string; state: GameState }>;
  move(gameId: string, poly: string): Promise<MoveResult>;
  hint(gameId: string): Promise<HintResult>;
}

export function makeApi(base: string, fetchFn?: FetchLike): Api {
  const f: FetchLike = fetchFn ?? ((input, init) => fetch(input, init));
  const root = base.replace(/\/$/, "");
  const json = { "content-type": "application/json" };
  return {
    catalog: () => request<Catalog>(f, `${root}/catalog`),
    createGame: (ringId, field, engineSide) =>
      request<CreateResult>(f, `${root}/games`, {
        method: "POST",
        headers: json,
        body: JSON.stringify({ ring_id: ringId, field, engine_side: engineSide }),
      }),
    getGame: (gameId) => request(f, `${root}/games/${gameId}`),
    move: (gameId, poly) =>
      request<MoveResult>(f, `${root}/games/${gameId}/moves`, {
        method: "POST",
        headers: json,
        body: JSON.stringify({ poly }),
      }),
    hint: (gameId) => request<HintResult>(f, `${root}/games/${gameId}/hint`),
  };
}
