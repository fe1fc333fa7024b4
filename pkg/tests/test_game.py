"""Game solver and interactive play.

The solver's successor generation prunes by coset and scaling; the
`legal_successors` function enumerates every element of the algebra and is
the reference the pruned path is held against here.
"""

import pytest

from idealchomp import linalg
from idealchomp.algebra import IdealSubspace
from idealchomp.catalog import build_algebra
from idealchomp.game import (
    IllegalMove,
    apply_move,
    best_move,
    hint,
    legal_successors,
    new_session,
    solve,
    solve_monomial_restricted,
    solve_quotient_form,
    solver_for,
)


def fresh_solver(ring_id, p):
    # bypass solver_for's per-algebra cache so state counts start clean
    from idealchomp.game import GameSolver

    return GameSolver(build_algebra(ring_id, p))


# -- successor generation ------------------------------------------------------


@pytest.mark.parametrize("ring_id,p", [("R_4", 2), ("R_4", 3), ("R_8", 2), ("R_12", 2)])
def test_solver_successors_match_brute_force(ring_id, p):
    A = build_algebra(ring_id, p)
    solver = solver_for(A)
    frontier = [()]
    seen = set(frontier)
    while frontier:
        rows = frontier.pop()
        brute = {
            s.rows for s in legal_successors(A, IdealSubspace(rows))
            if len(s.rows) < A.rank  # solver never stores the full ring
        }
        got = set(solver.successors(rows))
        assert got == brute
        for s in got:
            if s not in seen:
                seen.add(s)
                frontier.append(s)


def test_successors_of_full_rank_4_root_frozen():
    # K[x,y]/(x,y)^2 over F_2: proper first moves are the three lines in m
    solver = fresh_solver("R_4", 2)
    succ = solver.successors(())
    assert len(succ) == 3
    assert sorted(succ) == [
        ((0, 0, 1),),
        ((0, 1, 0),),
        ((0, 1, 1),),
    ]


def test_move_scaling_gives_the_same_successor():
    A = build_algebra("R_4", 5)
    x = A.parse_element("x").coords
    for c in range(2, 5):
        scaled = tuple((c * v) % 5 for v in x)
        assert A.principal_ideal(x).rows == A.principal_ideal(scaled).rows


# -- solve -----------------------------------------------------------------


def test_solve_field_is_second_player_win():
    for p in (2, 3, 5):
        report = solve(build_algebra("R_1", p))
        assert report.winner == "B"
        assert report.winning_first_moves == []
        assert report.states == 1  # only the zero ideal


def test_solve_r2_winner_and_move_frozen():
    report = solve(build_algebra("R_2", 2), ring_id="R_2")
    assert report.winner == "A"
    assert [m.render() for m in report.winning_first_moves] == ["x"]


def test_solve_r4_second_player_win():
    report = solve(build_algebra("R_4", 2))
    assert report.winner == "B"
    assert report.winning_first_moves == []


def test_solve_r8_all_seven_radical_lines_win():
    # x, y, z and their sums: every line of m is a winning first move
    report = solve(build_algebra("R_8", 2))
    assert report.winner == "A"
    moves = {m.render() for m in report.winning_first_moves}
    assert moves == {"x", "y", "z", "x + y", "x + z", "y + z", "x + y + z"}


def test_solve_report_json_shape():
    data = solve(build_algebra("R_2", 3), ring_id="R_2").to_json()
    assert data["ring_id"] == "R_2"
    assert data["field"] == 3
    assert data["winner"] == "A"
    assert data["winning_first_moves"] == ["x"]
    assert isinstance(data["states"], int) and data["states"] >= 1
    assert isinstance(data["transitions"], int)
    assert isinstance(data["ms"], float) or isinstance(data["ms"], int)


@pytest.mark.parametrize("ring_id", ["R_1", "R_2", "R_4", "R_8", "R_12", "R_13"])
@pytest.mark.parametrize("p", [2, 3])
def test_quotient_form_agrees_with_ideal_form(ring_id, p):
    A = build_algebra(ring_id, p)
    a = solve(A)
    b = solve_quotient_form(A)
    assert a.winner == b.winner
    assert sorted(m.render() for m in a.winning_first_moves) == sorted(
        m.render() for m in b.winning_first_moves
    )


# -- game length and consistency ---------------------------------------------


def test_game_length_parity_matches_winner():
    # misère: the loser makes the last move; a won position needs an even
    # number of remaining moves for the mover iff ... parity is fixed by who
    # adjoins the final unit, so check directly against win labels instead.
    solver = fresh_solver("R_12", 2)
    solver.win(())
    for rows in list(solver.memo):
        length = solver.game_length(rows)
        assert length >= 1
        # the mover wins iff someone else is forced to the last move
        assert solver.memo[rows] == (length % 2 == 0)


def test_consistency_ok_on_solved_tables():
    for ring_id, p in [("R_4", 2), ("R_12", 2), ("R_2", 3)]:
        solver = fresh_solver(ring_id, p)
        solver.win(())
        assert solver.consistency_ok()


def test_move_representative_is_minimal_and_valid():
    A = build_algebra("R_12", 2)
    solver = solver_for(A)
    for target in solver.successors(()):
        rep = solver.move_representative((), target)
        assert A.principal_ideal(rep).rows == target
        # nothing lexicographically smaller generates the same ideal
        import itertools

        for vec in itertools.product(range(2), repeat=A.rank):
            if vec >= rep or not any(vec):
                continue
            assert A.principal_ideal(vec).rows != target


def test_forced_losing_move_returns_element_outside():
    A = build_algebra("R_1", 2)
    solver = solver_for(A)
    v = solver.forced_losing_move(())
    assert any(v)
    assert A.is_full(A.principal_ideal(v))


# -- monomial-restricted form ---------------------------------------------


def test_monomial_restricted_one_by_one_is_a_loss():
    assert solve_monomial_restricted(1, 1, 2).winner == "B"


@pytest.mark.parametrize("a,b", [(1, 2), (2, 1), (2, 2), (3, 2), (2, 3)])
def test_monomial_restricted_small_grids_first_player_wins(a, b):
    assert solve_monomial_restricted(a, b, 2).winner == "A"


def test_monomial_restricted_field_independent():
    for p in (2, 3):
        assert solve_monomial_restricted(3, 3, p).winner == "A"


# -- interactive sessions ---------------------------------------------------


def test_session_full_game_on_r4():
    A = build_algebra("R_4", 2)
    s = new_session(A, engine_side="B", ring_id="R_4")
    assert s.to_move == "A"
    out = apply_move(s, A.parse_element("x"))
    assert not out.ended and s.to_move == "B"
    reply = best_move(s)
    assert not reply.resign  # engine holds the won side
    out = apply_move(s, reply.element)
    assert not out.ended and s.to_move == "A"
    # ideal is now the maximal ideal; any remaining element is a unit
    assert len(s.state.ideal.rows) == A.rank - 1
    out = apply_move(s, A.parse_element("1"))
    assert out.ended and out.was_unit
    assert s.status == "closed"
    assert s.loser == "A"
    assert len(s.state.history) == 3
    for rec in s.state.history:
        assert set(rec) == {"player", "move", "resulting_ideal_basis"}


def test_apply_move_rejects_zero_and_contained():
    A = build_algebra("R_4", 2)
    s = new_session(A, None)
    with pytest.raises(IllegalMove):
        apply_move(s, A.parse_element("0"))
    apply_move(s, A.parse_element("x"))
    with pytest.raises(IllegalMove):
        apply_move(s, A.parse_element("x"))


def test_apply_move_rejects_after_close():
    A = build_algebra("R_1", 2)
    s = new_session(A, None)
    apply_move(s, A.parse_element("1"))
    assert s.status == "closed"
    with pytest.raises(IllegalMove):
        apply_move(s, A.parse_element("1"))


def test_hint_on_won_and_lost_positions():
    A2 = build_algebra("R_2", 2)
    assert hint(new_session(A2, None)).render() == "x"
    A4 = build_algebra("R_4", 2)
    assert hint(new_session(A4, None)) is None


def test_best_move_delays_when_lost():
    # engine on the losing side of R_4 must still move, flagged as resign
    A = build_algebra("R_4", 2)
    s = new_session(A, engine_side="A")
    choice = best_move(s)
    assert choice.resign
    out = apply_move(s, choice.element)
    assert not out.ended  # delaying, not suiciding


def test_engine_never_hands_over_a_win_on_r4():
    # exhaustive: for every human first move, the engine reply lands the
    # human in a position with no winning move
    A = build_algebra("R_4", 2)
    solver = solver_for(A)
    solver.win(())
    for first in solver.successors(()):
        s = new_session(A, engine_side="B")
        rep = solver.move_representative((), first)
        from idealchomp.algebra import AlgElement

        apply_move(s, AlgElement(A, rep))
        choice = best_move(s)
        assert not choice.resign
        out = apply_move(s, choice.element)
        if not out.ended:
            assert not solver.win(s.state.ideal.rows)
