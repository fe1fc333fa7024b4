"""Exhaustive solver and play engine for the ideal-adjoining game on
finite-rank commutative algebras over prime fields.

Two players alternately adjoin one element to an ideal of a fixed
algebra; whoever makes the ideal the whole ring loses.  The package
solves the game by retrograde analysis over the ideal lattice, ships a
catalog of small local algebras with known winners and reductions, and
exposes the engine through a CLI and a JSON API.
"""

from .algebra import (
    AlgElement,
    FiniteAlgebra,
    IdealSubspace,
    NotLocal,
    QuotientIsZeroRing,
    from_presentation,
)
from .catalog import (
    CatalogEntry,
    CharMismatch,
    ReductionRow,
    UnknownRing,
    build_algebra,
    load_catalog,
    load_reductions,
    parse_ring_descriptor,
)
from .field import DivisionByZero, ModulusMismatch, PrimeField, PrimeFieldElement
from .game import (
    EngineChoice,
    GameState,
    IllegalMove,
    PlaySession,
    SolveReport,
    apply_move,
    best_move,
    hint,
    legal_successors,
    new_session,
    solve,
    solve_monomial_restricted,
    solve_quotient_form,
)
from .groebner import (
    BudgetExceeded,
    InfiniteRank,
    PolyIdeal,
    buchberger,
    ideal_equal,
    normal_form,
    quotient_basis,
    s_polynomial,
)
from .henson import (
    SpecialIdealWitness,
    henson_condition_examples,
    is_special,
    respond_common_root,
    verify_example_game,
)
from .iso import IsoResult, is_isomorphic, verify_explicit_iso
from .parser import ParseError
from .poly import DEGREVLEX, LEX, MonomialOrder, Polynomial, PolyRing
from .verify import VerificationOutcome, run_suite

__version__ = "0.1.0"

__all__ = [
    "AlgElement",
    "BudgetExceeded",
    "CatalogEntry",
    "CharMismatch",
    "DEGREVLEX",
    "DivisionByZero",
    "EngineChoice",
    "FiniteAlgebra",
    "GameState",
    "IdealSubspace",
    "IllegalMove",
    "InfiniteRank",
    "IsoResult",
    "LEX",
    "ModulusMismatch",
    "MonomialOrder",
    "NotLocal",
    "ParseError",
    "PlaySession",
    "PolyIdeal",
    "Polynomial",
    "PolyRing",
    "PrimeField",
    "PrimeFieldElement",
    "QuotientIsZeroRing",
    "ReductionRow",
    "SolveReport",
    "SpecialIdealWitness",
    "UnknownRing",
    "VerificationOutcome",
    "apply_move",
    "best_move",
    "buchberger",
    "build_algebra",
    "from_presentation",
    "henson_condition_examples",
    "hint",
    "ideal_equal",
    "is_isomorphic",
    "is_special",
    "legal_successors",
    "load_catalog",
    "load_reductions",
    "new_session",
    "normal_form",
    "parse_ring_descriptor",
    "quotient_basis",
    "respond_common_root",
    "run_suite",
    "s_polynomial",
    "solve",
    "solve_monomial_restricted",
    "solve_quotient_form",
    "verify_example_game",
    "verify_explicit_iso",
]
