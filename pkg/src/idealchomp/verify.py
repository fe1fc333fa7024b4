"""Cross-checking suites: solver results against the bundled catalog,
reduction rows, explicit isomorphisms, product positions, and the
classical-Chomp correspondence.

Each suite returns plain outcome records; failures are data for the
caller, never exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import FiniteAlgebra, from_presentation
from .catalog import build_algebra, load_catalog, load_reductions
from .field import PrimeField
from .game import (
    solve,
    solve_monomial_restricted,
    solve_quotient_form,
    solver_for,
)
from .groebner import PolyIdeal
from .henson import henson_condition_examples, respond_common_root, verify_example_game
from .iso import is_isomorphic, verify_explicit_iso
from .poly import PolyRing

SUITES = ("table1", "table2", "iso", "equivalence", "products", "henson", "chomp")


@dataclass(frozen=True)
class VerificationOutcome:
    check: str
    status: str  # pass | fail | undecided
    details: str = ""

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def _outcome(check: str, ok: bool, details: str = "") -> VerificationOutcome:
    return VerificationOutcome(check, "pass" if ok else "fail", details)


def suite_table1(fields: list[int]) -> list[VerificationOutcome]:
    """Exhaustive solver winner against the catalog's Win column."""
    out = []
    for p in fields:
        for e in load_catalog(p):
            report = solve(build_algebra(e.id, p), ring_id=e.id)
            out.append(
                _outcome(
                    f"table1/{e.id}/F_{p}",
                    report.winner == e.win,
                    f"solver={report.winner} expected={e.win}",
                )
            )
    return out


def suite_table2(fields: list[int]) -> list[VerificationOutcome]:
    """Every reduction row: the move's quotient matches the named target
    ring up to isomorphism, and the move itself wins."""
    out = []
    for p in fields:
        for row in load_reductions(p):
            check = f"table2/{row.source}/F_{p}"
            source = build_algebra(row.source, p)
            target = build_algebra(row.target, p)
            move = source.parse_element(row.move)
            ideal = source.principal_ideal(move)
            if source.is_full(ideal):
                out.append(_outcome(check, False, "listed move generates the whole ring"))
                continue
            quotient, _ = source.quotient_by(ideal)
            iso = is_isomorphic(quotient, target)
            if not iso.is_yes:
                status = "undecided" if iso.verdict == "undecided" else "fail"
                out.append(
                    VerificationOutcome(
                        check, status, f"quotient vs {row.target}: {iso.verdict} ({iso.stage})"
                    )
                )
                continue
            wins = not solver_for(source).win(ideal.rows)
            out.append(
                _outcome(check, wins, f"move {row.move} " + ("wins" if wins else "loses"))
            )
    return out


def _redundant_generator_pair(p: int) -> tuple[FiniteAlgebra, FiniteAlgebra]:
    small = PolyRing(PrimeField(p), ("y", "z"))
    big = PolyRing(PrimeField(p), ("x", "y", "z"))
    a = from_presentation(
        PolyIdeal(small, tuple(small.parse(s) for s in ("y^2", "y*z", "z^2")))
    )
    b = from_presentation(
        PolyIdeal(
            big,
            tuple(
                big.parse(s)
                for s in ("x^2", "x*y", "x*z", "y^2", "y*z", "z^2", "x+y")
            ),
        )
    )
    return a, b


def suite_iso(fields: list[int]) -> list[VerificationOutcome]:
    """The explicit pair of substitutions identifying K[y,z]/(y,z)^2 with
    K[x,y,z]/((x,y,z)^2 + (x+y)), plus an independent structural check."""
    out = []
    for p in fields:
        a, b = _redundant_generator_pair(p)
        explicit = verify_explicit_iso(
            {"y": "y", "z": "z"}, {"x": "-y", "y": "y", "z": "z"}, a, b
        )
        structural = is_isomorphic(a, b)
        out.append(_outcome(f"iso/explicit/F_{p}", explicit, "substitution maps"))
        out.append(
            _outcome(
                f"iso/structural/F_{p}",
                structural.is_yes,
                f"{structural.verdict} ({structural.stage})",
            )
        )
    return out


def suite_equivalence(fields: list[int]) -> list[VerificationOutcome]:
    """Ideal-form and quotient-form solvers agree on small catalog rings."""
    out = []
    for p in fields:
        for e in load_catalog(p):
            if e.n > 4:
                continue
            algebra = build_algebra(e.id, p)
            direct = solve(algebra, ring_id=e.id)
            quotient = solve_quotient_form(algebra, ring_id=e.id)
            same_winner = direct.winner == quotient.winner
            direct_moves = sorted(m.render() for m in direct.winning_first_moves)
            quotient_moves = sorted(m.render() for m in quotient.winning_first_moves)
            out.append(
                _outcome(
                    f"equivalence/{e.id}/F_{p}",
                    same_winner and direct_moves == quotient_moves,
                    f"direct={direct.winner}/{direct_moves} "
                    f"quotient={quotient.winner}/{quotient_moves}",
                )
            )
    return out


def _product_candidates(
    product: FiniteAlgebra, left: FiniteAlgebra, right: FiniteAlgebra, wins: tuple[str, str]
):
    n1 = left.rank
    one1 = left.one().coords
    one2 = right.one().coords
    zero1 = (0,) * left.rank
    zero2 = (0,) * right.rank
    candidates = []
    if wins[0] == "A":
        a_w = solve(left).winning_first_moves[0].coords
        candidates.append(a_w + one2)
    if wins[1] == "A":
        b_w = solve(right).winning_first_moves[0].coords
        candidates.append(one1 + b_w)
    if not candidates:
        candidates.append(zero1 + one2)
        candidates.append(one1 + zero2)
    return [product.element(c) for c in candidates]


def suite_products(fields: list[int]) -> list[VerificationOutcome]:
    """Pairwise products of catalog rings up to total rank 6: the first
    player wins, via a move built from the factors."""
    out = []
    for p in fields:
        entries = [e for e in load_catalog(p) if e.n <= 5]
        for i, e1 in enumerate(entries):
            for e2 in entries[i:]:
                if e1.n + e2.n > 6:
                    continue
                check = f"products/{e1.id}*{e2.id}/F_{p}"
                left = build_algebra(e1.id, p)
                right = build_algebra(e2.id, p)
                product = left.direct_product(right)
                report = solve(product)
                if report.winner != "A":
                    out.append(_outcome(check, False, f"winner={report.winner}"))
                    continue
                solver = solver_for(product)
                good = None
                for cand in _product_candidates(product, left, right, (e1.win, e2.win)):
                    ideal = product.principal_ideal(cand)
                    if not product.is_full(ideal) and not solver.win(ideal.rows):
                        good = cand
                        break
                out.append(
                    _outcome(
                        check,
                        good is not None,
                        f"constructed move {good.render()} wins" if good else "no constructed move wins",
                    )
                )
    return out


def suite_henson(fields: list[int]) -> list[VerificationOutcome]:
    """Scripted endgame and common-root response checks."""
    out = []
    for p in fields:
        if p < 3:
            continue
        out.append(
            _outcome(f"henson/example-game/F_{p}", verify_example_game(p), "scripted endgame")
        )
    ring5 = PolyRing(PrimeField(5), ("x", "y"))
    resp = respond_common_root(ring5.parse("(y-1)*(y-1) + x*(y-1)"))
    out.append(
        _outcome(
            "henson/respond/double-root",
            resp is not None and resp == ring5.parse("(y-1)*(y-1)"),
            f"response={resp.render() if resp else None}",
        )
    )
    ring3 = PolyRing(PrimeField(3), ("x", "y"))
    resp3 = respond_common_root(ring3.parse("y*(1 + x)"))
    out.append(
        _outcome(
            "henson/respond/simple-root",
            resp3 is not None and resp3 == ring3.parse("y + x"),
            f"response={resp3.render() if resp3 else None}",
        )
    )
    coprime = respond_common_root(ring5.parse("(y-1) + x*(y-2)"))
    out.append(
        _outcome("henson/respond/no-common-root", coprime is None, "expected not applicable")
    )
    witnesses = henson_condition_examples()
    out.append(
        _outcome(
            "henson/condition-witnesses",
            len(witnesses) == 4 and all(a == "x" for _, a in witnesses),
            f"{len(witnesses)} rings certified",
        )
    )
    return out


@lru_cache(maxsize=None)
def classical_chomp_winner(a: int, b: int) -> str:
    """Brute-force misère Chomp on an a-by-b grid of cells; eating cell
    (i, j) removes everything weakly above and to the right, and whoever
    eats (0, 0) loses.  Independent of everything else in this package.
    """
    full = frozenset((i, j) for i in range(a) for j in range(b))
    memo: dict[frozenset, bool] = {}

    def win(cells: frozenset) -> bool:
        if cells == {(0, 0)}:
            return False
        if cells in memo:
            return memo[cells]
        result = False
        for c in cells:
            if c == (0, 0):
                continue
            rest = frozenset(x for x in cells if not (x[0] >= c[0] and x[1] >= c[1]))
            if not win(rest):
                result = True
                break
        memo[cells] = result
        return result

    return "A" if win(full) else "B"


def suite_chomp(fields: list[int]) -> list[VerificationOutcome]:
    """Monomial-restricted solver against the grid brute force."""
    out = []
    for p in fields:
        for a in range(1, 5):
            for b in range(1, 5):
                report = solve_monomial_restricted(a, b, p)
                expected = classical_chomp_winner(a, b)
                out.append(
                    _outcome(
                        f"chomp/{a}x{b}/F_{p}",
                        report.winner == expected,
                        f"solver={report.winner} grid={expected}",
                    )
                )
    return out


def run_suite(name: str, fields: list[int]) -> list[VerificationOutcome]:
    table = {
        "table1": suite_table1,
        "table2": suite_table2,
        "iso": suite_iso,
        "equivalence": suite_equivalence,
        "products": suite_products,
        "henson": suite_henson,
        "chomp": suite_chomp,
    }
    if name not in table:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return table[name](fields)
