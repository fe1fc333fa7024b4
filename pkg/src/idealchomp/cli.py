"""Command-line interface: catalog inspection, solving, verification
suites, interactive play, and the HTTP service."""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import FiniteAlgebra
from .catalog import (
    CharMismatch,
    UnknownRing,
    all_entries,
    build_algebra,
    entry,
    load_catalog,
    parse_ring_descriptor,
)
from .game import (
    IllegalMove,
    apply_move,
    best_move,
    hint,
    new_session,
    solve,
    solve_quotient_form,
)
from .parser import ParseError
from .verify import SUITES, run_suite


def _resolve_ring(text: str, p: int) -> tuple[FiniteAlgebra, str | None]:
    """Ring id from the catalog, or an ad-hoc K[...]/(...) descriptor."""
    if text.startswith("K["):
        return parse_ring_descriptor(text, p), None
    return build_algebra(text, p), text


def _fields_arg(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        entries = load_catalog(args.char) if args.char else list(all_entries())
        width = max(len(e.id) for e in entries)
        for e in entries:
            d = "(" + ",".join(str(x) for x in e.d) + ")"
            print(
                f"{e.id:<{width}}  n={e.n}  d={d:<12} win={e.win}  "
                f"char={e.char:<12} {e.presentation()}"
            )
        return 0
    try:
        e = entry(args.id)
    except UnknownRing:
        print(f"unknown ring id {args.id!r}", file=sys.stderr)
        return 2
    print(f"id:           {e.id}")
    print(f"rank:         {e.n}")
    print(f"d-vector:     ({','.join(str(x) for x in e.d)})")
    print(f"presentation: {e.presentation()}")
    print(f"char:         {e.char}")
    print(f"winner:       {e.win}")
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        algebra, ring_id = _resolve_ring(args.ring, args.field)
    except (CharMismatch, UnknownRing, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    solver = solve_quotient_form if args.quotient_form else solve
    report = solver(algebra, ring_id=ring_id or args.ring)
    if args.json:
        print(json.dumps(report.to_json()))
        return 0
    print(f"ring: {args.ring}  field: F_{args.field}")
    print(f"winner: {report.winner}")
    moves = ", ".join(m.render() for m in report.winning_first_moves)
    print(f"winning first moves: {moves if moves else '(none)'}")
    print(f"states: {report.states}  transitions: {report.transitions}  ms: {report.elapsed_ms:.1f}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    fields = _fields_arg(args.field)
    outcomes = run_suite(args.suite, fields)
    failed = 0
    for o in outcomes:
        tag = o.status.upper()
        if not o.ok:
            failed += 1
        detail = f"  ({o.details})" if o.details else ""
        print(f"{tag:<5} {o.check}{detail}")
    print(f"{len(outcomes) - failed}/{len(outcomes)} passed")
    return 0 if failed == 0 else 1


def _print_position(session) -> None:
    A = session.algebra
    rows = session.state.ideal.rows
    basis = [A.render_coords(r) for r in rows]
    print(f"  ideal: ({', '.join(basis) if basis else '0'})")
    print(f"  quotient rank: {A.rank - len(rows)}   to move: {session.to_move}")


def cmd_play(args: argparse.Namespace) -> int:
    try:
        algebra, ring_id = _resolve_ring(args.ring, args.field)
    except (CharMismatch, UnknownRing, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    session = new_session(algebra, args.engine_side, ring_id or args.ring)
    print(f"playing on {args.ring} over F_{args.field}; engine is {args.engine_side or 'off'}")
    print("enter a polynomial, or: hint / state / quit")
    _print_position(session)
    while session.status == "open":
        if session.engine_side == session.to_move:
            choice = best_move(session)
            note = " (delaying, position lost)" if choice.resign else ""
            print(f"engine [{session.to_move}] plays {choice.element.render()}{note}")
            apply_move(session, choice.element)
            _print_position(session)
            continue
        try:
            text = input(f"[{session.to_move}] move> ").strip()
        except EOFError:
            print()
            return 0
        if not text:
            continue
        if text == "quit":
            return 0
        if text == "state":
            _print_position(session)
            continue
        if text == "hint":
            h = hint(session)
            print(f"  hint: {h.render()}" if h else "  no winning move exists")
            continue
        try:
            element = algebra.parse_element(text)
        except (ParseError, KeyError) as exc:
            print(f"  cannot parse: {exc}")
            continue
        if not element.is_zero() and element.is_unit():
            answer = input("  unit: immediate loss. play anyway? [y/N] ").strip().lower()
            if answer != "y":
                continue
        try:
            outcome = apply_move(session, element)
        except IllegalMove as exc:
            print(f"  illegal: {exc}")
            continue
        _print_position(session)
        if outcome.ended:
            break
    if session.loser is not None:
        print(f"game over: player {session.loser} made the ideal the whole ring and loses")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(
        create_app(static_dir=args.static),
        host=args.host,
        port=args.port,
        log_level="warning",
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealchomp",
        description="Solve and play the ideal-adjoining quotient game on finite-rank algebras over F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cat = sub.add_parser("catalog", help="list or inspect the bundled rings")
    cat_sub = p_cat.add_subparsers(dest="action", required=True)
    p_list = cat_sub.add_parser("list", help="print the full table")
    p_list.add_argument("--char", type=int, default=None, help="filter to rings defined over F_p")
    p_list.set_defaults(func=cmd_catalog)
    p_show = cat_sub.add_parser("show", help="dump a single entry")
    p_show.add_argument("id")
    p_show.set_defaults(func=cmd_catalog)

    p_solve = sub.add_parser("solve", help="exhaustively solve one ring")
    p_solve.add_argument("--ring", required=True, help="catalog id or K[vars]/(gens) descriptor")
    p_solve.add_argument("--field", type=int, required=True)
    p_solve.add_argument("--quotient-form", action="store_true", dest="quotient_form")
    p_solve.add_argument("--json", action="store_true")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="run a cross-checking suite")
    p_verify.add_argument("--suite", required=True, choices=SUITES)
    p_verify.add_argument("--field", default="2,3", help="comma-separated primes")
    p_verify.set_defaults(func=cmd_verify)

    p_play = sub.add_parser("play", help="interactive game in the terminal")
    p_play.add_argument("--ring", required=True)
    p_play.add_argument("--field", type=int, required=True)
    p_play.add_argument("--engine-side", choices=("A", "B"), default=None, dest="engine_side")
    p_play.set_defaults(func=cmd_play)

    p_serve = sub.add_parser("serve", help="run the JSON API")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--static", default=None, help="directory of built UI files to serve at /")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
