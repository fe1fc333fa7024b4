"""The ideal game: exhaustive misère solving on the ideal lattice.

States are proper ideals in canonical RREF form; a move adjoins any element
outside the current ideal, and whoever makes the ideal the whole ring loses.
The solver expands every reachable state once (memoised on the RREF key),
so a solved table doubles as ground truth for consistency checks.

Successor generation is the hot path: candidate moves are enumerated up to
scalar and modulo the current ideal, and all their closures I + a*A are row
reduced in one numpy batch.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .algebra import AlgElement, FiniteAlgebra, IdealSubspace, QuotientIsZeroRing
from .groebner import PolyIdeal
from .poly import PolyRing


class IllegalMove(ValueError):
    """The offered element already lies in the current ideal (or is zero)."""


@dataclass
class SolveReport:
    winner: str  # "A" | "B"
    winning_first_moves: list[AlgElement]
    winning_successors: list[IdealSubspace]
    states: int
    transitions: int
    elapsed_ms: float
    ring_id: str | None = None
    field: int = 0

    def to_json(self) -> dict:
        return {
            "ring_id": self.ring_id,
            "field": self.field,
            "winner": self.winner,
            "winning_first_moves": [m.render() for m in self.winning_first_moves],
            "states": self.states,
            "transitions": self.transitions,
            "ms": round(self.elapsed_ms, 3),
        }


class GameSolver:
    def __init__(self, algebra: FiniteAlgebra):
        self.A = algebra
        self.memo: dict[linalg.Mat, bool] = {}
        self.transitions = 0
        self._length: dict[linalg.Mat, int] = {}
        if algebra.is_local():
            self._ambient = algebra.radical().rows
        else:
            self._ambient = linalg.identity(algebra.rank)

    # -- successor enumeration ----------------------------------------------

    def _complement(self, rows: linalg.Mat) -> list[linalg.Vec]:
        """Vectors extending `rows` to a basis of the ambient move space."""
        cur = rows
        out = []
        for r in self._ambient:
            grown = linalg.rref(list(cur) + [r], self.A.p)
            if len(grown) > len(cur):
                out.append(r)
                cur = grown
        return out

    def successors(self, rows: linalg.Mat) -> list[linalg.Mat]:
        """Distinct proper successors of the ideal spanned by `rows`,
        in deterministic first-seen order."""
        A = self.A
        p, n = A.p, A.rank
        comp = self._complement(rows)
        q = len(comp)
        if q == 0:
            return []
        coeffs = []
        for lead in range(q):
            for tail in itertools.product(range(p), repeat=q - lead - 1):
                coeffs.append((0,) * lead + (1,) + tail)
        V = np.array(coeffs, dtype=np.int64) @ np.array(comp, dtype=np.int64) % p
        K = V.shape[0]
        prods = (V @ A._tensor).reshape(K, n, n)
        d = len(rows)
        if d:
            base = np.broadcast_to(np.array(rows, dtype=np.int64), (K, d, n))
            stacks = np.concatenate([base, prods], axis=1)
        else:
            stacks = prods
        reduced, dims = linalg.rref_batch(stacks, p)
        seen: dict[linalg.Mat, None] = {}
        for k in range(K):
            dk = int(dims[k])
            if dk == n:
                continue  # the full ring: reachable, terminal, never stored
            key = tuple(tuple(int(x) for x in row) for row in reduced[k, :dk])
            if key not in seen:
                seen[key] = None
        return list(seen.keys())

    # -- solving --------------------------------------------------------------

    def win(self, rows: linalg.Mat) -> bool:
        cached = self.memo.get(rows)
        if cached is not None:
            return cached
        succ = self.successors(rows)
        self.transitions += len(succ)
        value = False
        for s in succ:
            if not self.win(s):
                value = True
        self.memo[rows] = value
        return value

    def game_length(self, rows: linalg.Mat) -> int:
        """Moves remaining under optimal play (winner hurries, loser stalls)."""
        cached = self._length.get(rows)
        if cached is not None:
            return cached
        succ = self.successors(rows)
        if self.win(rows):
            value = 1 + min(self.game_length(s) for s in succ if not self.memo[s])
        elif not succ:
            value = 1  # forced to adjoin a unit
        else:
            value = 1 + max(self.game_length(s) for s in succ)
        self._length[rows] = value
        return value

    def move_representative(self, rows: linalg.Mat, target: linalg.Mat) -> linalg.Vec:
        """Lexicographically least coordinate vector taking `rows` to `target`."""
        A = self.A
        p = A.p
        target_rows = target
        elements = set()
        for cf in itertools.product(range(p), repeat=len(target_rows)):
            v = [0] * A.rank
            for c, row in zip(cf, target_rows):
                if c:
                    for k in range(A.rank):
                        v[k] += c * row[k]
            elements.add(tuple(x % p for x in v))
        for vec in sorted(elements):
            if not any(vec):
                continue
            if linalg.in_rowspace(vec, rows, p):
                continue
            if A.ideal_add(IdealSubspace(rows), vec).rows == target_rows:
                return vec
        raise RuntimeError("target is not a successor")

    def forced_losing_move(self, rows: linalg.Mat) -> linalg.Vec:
        """Least element outside the ideal (its closure is the full ring when
        no proper successor exists)."""
        p = self.A.p
        for vec in itertools.product(range(p), repeat=self.A.rank):
            if any(vec) and not linalg.in_rowspace(vec, rows, p):
                return vec
        raise RuntimeError("ideal is already the whole ring")

    def consistency_ok(self) -> bool:
        """Re-derive every stored label from its successors' labels."""
        for rows, value in self.memo.items():
            succ = self.successors(rows)
            derived = any(not self.memo[s] for s in succ)
            if derived != value:
                return False
        return True


def solver_for(algebra: FiniteAlgebra) -> GameSolver:
    solver = getattr(algebra, "_game_solver", None)
    if solver is None:
        solver = GameSolver(algebra)
        algebra._game_solver = solver
    return solver


def legal_successors(algebra: FiniteAlgebra, ideal: IdealSubspace) -> list[IdealSubspace]:
    """All distinct ideals one move away, the full ring included.

    Reference implementation by sheer enumeration of elements; the solver
    reaches the same set through coset and scaling reduction (tested against
    this one).
    """
    seen: dict[linalg.Mat, IdealSubspace] = {}
    for coords in algebra.all_coords():
        if not any(coords):
            continue
        if algebra.ideal_contains(ideal, coords):
            continue
        j = algebra.ideal_add(ideal, coords)
        seen.setdefault(j.rows, j)
    return list(seen.values())


def solve(algebra: FiniteAlgebra, ring_id: str | None = None) -> SolveReport:
    """Full solve from the zero ideal."""
    solver = solver_for(algebra)
    t0 = time.perf_counter()
    root: linalg.Mat = ()
    root_win = solver.win(root)
    succ = solver.successors(root)
    losing = [s for s in succ if not solver.memo[s]]
    moves = []
    targets = []
    for s in losing:
        rep = solver.move_representative(root, s)
        moves.append(AlgElement(algebra, rep))
        targets.append(IdealSubspace(s))
    elapsed = (time.perf_counter() - t0) * 1000
    return SolveReport(
        winner="A" if root_win else "B",
        winning_first_moves=moves,
        winning_successors=targets,
        states=len(solver.memo),
        transitions=solver.transitions,
        elapsed_ms=elapsed,
        ring_id=ring_id,
        field=algebra.p,
    )


def solve_quotient_form(algebra: FiniteAlgebra, ring_id: str | None = None) -> SolveReport:
    """Same game, independent bookkeeping: states are quotient algebras.

    Each move divides the current quotient by a principal ideal; the state
    key is the kernel of the accumulated projection, an ideal of the
    original algebra.
    """
    t0 = time.perf_counter()
    p = algebra.p
    n = algebra.rank
    memo: dict[linalg.Mat, bool] = {}
    transitions = 0

    def kernel_of(proj: linalg.Mat) -> linalg.Mat:
        cols = len(proj[0]) if proj else 0
        functionals = [tuple(proj[i][k] for i in range(n)) for k in range(cols)]
        return linalg.nullspace(functionals, p, n)

    def projective_elements(Q: FiniteAlgebra):
        for lead in range(Q.rank):
            for tail in itertools.product(range(p), repeat=Q.rank - lead - 1):
                yield (0,) * lead + (1,) + tail

    def win(Q: FiniteAlgebra, proj: linalg.Mat, key: linalg.Mat) -> bool:
        nonlocal transitions
        cached = memo.get(key)
        if cached is not None:
            return cached
        succ: dict[linalg.Mat, tuple[FiniteAlgebra, linalg.Mat]] = {}
        for v in projective_elements(Q):
            principal = Q.principal_ideal(v)
            if Q.is_full(principal):
                continue  # move to the zero ring: immediate loss, not a state
            Q2, proj2 = Q.quotient_by(principal)
            combined = linalg.mat_mul(proj, proj2, p)
            k2 = kernel_of(combined)
            if k2 not in succ:
                succ[k2] = (Q2, combined)
        transitions += len(succ)
        value = False
        for k2, (Q2, combined) in succ.items():
            if not win(Q2, combined, k2):
                value = True
        memo[key] = value
        return value

    ident = linalg.identity(n)
    root_win = win(algebra, ident, ())
    # reconstruct the winning first moves in original coordinates
    losing_targets: list[linalg.Mat] = []
    seen: set[linalg.Mat] = set()
    for v in projective_elements(algebra):
        principal = algebra.principal_ideal(v)
        if algebra.is_full(principal):
            continue
        if principal.rows in seen:
            continue
        seen.add(principal.rows)
        if not memo[principal.rows]:
            losing_targets.append(principal.rows)
    solver = solver_for(algebra)
    moves = [AlgElement(algebra, solver.move_representative((), t)) for t in losing_targets]
    elapsed = (time.perf_counter() - t0) * 1000
    return SolveReport(
        winner="A" if root_win else "B",
        winning_first_moves=moves,
        winning_successors=[IdealSubspace(t) for t in losing_targets],
        states=len(memo),
        transitions=transitions,
        elapsed_ms=elapsed,
        ring_id=ring_id,
        field=p,
    )


def solve_monomial_restricted(a: int, b: int, p: int) -> SolveReport:
    """The game on F_p[x,y]/(x^a, y^b) with moves restricted to monomials."""
    from .field import PrimeField

    ring = PolyRing(PrimeField(p), ("x", "y"))
    ideal = PolyIdeal(ring, [ring.parse(f"x^{a}"), ring.parse(f"y^{b}")])
    from .algebra import from_presentation

    A = from_presentation(ideal)
    t0 = time.perf_counter()
    mono_vecs = [
        A._basis_vec(i) for i, label in enumerate(A.labels) if label != "1"
    ]
    memo: dict[linalg.Mat, bool] = {}
    transitions = 0

    def win(rows: linalg.Mat) -> bool:
        nonlocal transitions
        cached = memo.get(rows)
        if cached is not None:
            return cached
        succ: dict[linalg.Mat, None] = {}
        for v in mono_vecs:
            if linalg.in_rowspace(v, rows, p):
                continue
            j = A.ideal_add(IdealSubspace(rows), v)
            succ.setdefault(j.rows)
        transitions += len(succ)
        value = False
        for s in succ:
            if not win(s):
                value = True
        memo[rows] = value
        return value

    root_win = win(())
    elapsed = (time.perf_counter() - t0) * 1000
    return SolveReport(
        winner="A" if root_win else "B",
        winning_first_moves=[],
        winning_successors=[],
        states=len(memo),
        transitions=transitions,
        elapsed_ms=elapsed,
        ring_id=f"chomp_{a}x{b}",
        field=p,
    )


# -- interactive play ---------------------------------------------------------


@dataclass
class GameState:
    algebra: FiniteAlgebra
    ideal: IdealSubspace
    history: list[dict] = dc_field(default_factory=list)
    to_move: str = "A"


@dataclass
class MoveOutcome:
    element: AlgElement
    ideal_after: IdealSubspace
    ended: bool
    loser: str | None
    was_unit: bool


@dataclass
class PlaySession:
    state: GameState
    engine_side: str | None  # "A" | "B" | None
    ring_id: str | None = None
    status: str = "open"  # "open" | "closed"
    loser: str | None = None

    @property
    def algebra(self) -> FiniteAlgebra:
        return self.state.algebra

    @property
    def to_move(self) -> str:
        return self.state.to_move


def new_session(algebra: FiniteAlgebra, engine_side: str | None, ring_id: str | None = None) -> PlaySession:
    return PlaySession(GameState(algebra, algebra.zero_ideal()), engine_side, ring_id)


def apply_move(session: PlaySession, element: AlgElement) -> MoveOutcome:
    if session.status != "open":
        raise IllegalMove("the game is over")
    A = session.algebra
    ideal = session.state.ideal
    if element.is_zero() or A.ideal_contains(ideal, element.coords):
        raise IllegalMove(f"{element.render()} is already in the ideal")
    was_unit = element.is_unit()
    after = A.ideal_add(ideal, element.coords)
    mover = session.state.to_move
    record = {
        "player": mover,
        "move": element.render(),
        "resulting_ideal_basis": [A.render_coords(r) for r in after.rows],
    }
    session.state.history.append(record)
    if A.is_full(after):
        session.status = "closed"
        session.loser = mover
        session.state.ideal = after
        return MoveOutcome(element, after, True, mover, was_unit)
    session.state.ideal = after
    session.state.to_move = "B" if mover == "A" else "A"
    return MoveOutcome(element, after, False, None, was_unit)


@dataclass
class EngineChoice:
    element: AlgElement
    resign: bool  # true when the position is lost and this only delays


def best_move(session: PlaySession) -> EngineChoice:
    """Winning move if one exists, else the longest-delaying move."""
    A = session.algebra
    solver = solver_for(A)
    rows = session.state.ideal.rows
    solver.win(rows)
    succ = solver.successors(rows)
    losing = [s for s in succ if not solver.memo[s]]
    if losing:
        rep = solver.move_representative(rows, losing[0])
        return EngineChoice(AlgElement(A, rep), resign=False)
    if not succ:
        return EngineChoice(AlgElement(A, solver.forced_losing_move(rows)), resign=True)
    delay = max(succ, key=lambda s: (solver.game_length(s), s))
    rep = solver.move_representative(rows, delay)
    return EngineChoice(AlgElement(A, rep), resign=True)


def hint(session: PlaySession) -> AlgElement | None:
    """Winning move for the player to move, or None if the position is lost."""
    solver = solver_for(session.algebra)
    rows = session.state.ideal.rows
    if not solver.win(rows):
        return None
    for s in solver.successors(rows):
        if not solver.memo[s]:
            return AlgElement(session.algebra, solver.move_representative(rows, s))
    return None
