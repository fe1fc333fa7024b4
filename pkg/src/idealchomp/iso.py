"""Isomorphism testing between local finite algebras.

Staged: cheap linear invariants first, a closed-form answer when both
radicals square to zero, then structural profiles of radical elements, and
only as a last resort a bounded search over images of a minimal generating
set of the radical.  The search is exhaustive over a complete candidate
space, so running it to the end without a hit is a definitive "no"; only a
budget stop is reported as undecided.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import FiniteAlgebra
from .poly import Polynomial

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class IsoResult:
    verdict: str  # "yes" | "no" | "undecided"
    stage: str
    detail: str = ""
    witness: linalg.Mat | None = None  # row i = image of A's basis vector i

    @property
    def is_yes(self) -> bool:
        return self.verdict == "yes"

    @property
    def is_no(self) -> bool:
        return self.verdict == "no"


class _BudgetStop(Exception):
    pass


def invariant_signature(A: FiniteAlgebra):
    return (A.rank, A.d_vector(), A.annihilator_dims())


def element_profile(A: FiniteAlgebra, v: linalg.Vec) -> tuple[int, int, int]:
    """(nilpotency index, dim v*A, dim ann(v)) for a radical element."""
    idx = 1
    w = v
    while any(w):
        w = A.mul_coords(w, v)
        idx += 1
        if idx > A.rank + 1:
            raise ValueError("element is not nilpotent")
    mat = A.mult_matrix(v)
    r = linalg.rank(mat, A.p)
    return (idx, r, A.rank - r)


def radical_profiles(A: FiniteAlgebra) -> dict[linalg.Vec, tuple[int, int, int]]:
    if A._profiles is None:
        A._profiles = {
            v: element_profile(A, v) for v in A.radical_elements() if any(v)
        }
    return A._profiles


def structural_profile(A: FiniteAlgebra):
    """Iso-invariant multiset of radical element profiles."""
    return sorted(radical_profiles(A).values())


def minimal_generator_lifts(A: FiniteAlgebra) -> list[linalg.Vec]:
    """Radical elements whose classes form a basis of m/m^2."""
    chain = A.power_chain()
    m2 = chain[1] if len(chain) > 1 else ()
    cur = m2
    out = []
    for row in A.radical().rows:
        grown = linalg.rref(list(cur) + [row], A.p)
        if len(grown) > len(cur):
            out.append(row)
            cur = grown
    return out


def word_basis(A: FiniteAlgebra, gens: list[linalg.Vec]):
    """A linear basis of A made of products of generators.

    Returns (nodes, C) where nodes[k] = (parent index, generator index)
    describing word k as word[parent] * gens[g] (node 0 is the empty word,
    the unit), and C stacks the word vectors as rows.
    """
    nodes: list[tuple[int, int]] = [(-1, -1)]
    vectors: list[linalg.Vec] = [A.unit]
    basis = linalg.rref([A.unit], A.p)
    frontier = [0]
    while len(vectors) < A.rank and frontier:
        nxt = []
        for parent in frontier:
            for gi, g in enumerate(gens):
                vec = A.mul_coords(vectors[parent], g)
                grown = linalg.rref(list(basis) + [vec], A.p)
                if len(grown) > len(basis):
                    basis = grown
                    nodes.append((parent, gi))
                    vectors.append(vec)
                    nxt.append(len(vectors) - 1)
        frontier = nxt
    if len(vectors) < A.rank:
        raise ValueError("generators do not span the algebra")
    return nodes, tuple(vectors)


def check_homomorphism(A: FiniteAlgebra, B: FiniteAlgebra, M: linalg.Mat) -> bool:
    """Is the linear map row->row an algebra map A -> B?"""
    p = A.p
    if linalg.mat_mul((A.unit,), M, p)[0] != B.unit:
        return False
    images = linalg.mat_mul(linalg.identity(A.rank), M, p)
    for i in range(A.rank):
        for j in range(i, A.rank):
            lhs = linalg.mat_mul((A.structure[i][j],), M, p)[0]
            rhs = B.mul_coords(images[i], images[j])
            if lhs != rhs:
                return False
    return True


def _square_zero_witness(A: FiniteAlgebra, B: FiniteAlgebra) -> linalg.Mat:
    p = A.p
    ca = (A.unit,) + A.radical().rows
    cb = (B.unit,) + B.radical().rows
    inv = linalg.invert(ca, p)
    return linalg.mat_mul(inv, cb, p)


def _bounded_search(A: FiniteAlgebra, B: FiniteAlgebra, budget: int):
    p = A.p
    gens = minimal_generator_lifts(A)
    nodes, vectors = word_basis(A, gens)
    cinv = linalg.invert(vectors, p)
    gen_profiles = [element_profile(A, g) for g in gens]
    prof_b = radical_profiles(B)
    pools = [
        [v for v in sorted(prof_b) if prof_b[v] == gp] for gp in gen_profiles
    ]
    chain_b = B.power_chain()
    m2b = chain_b[1] if len(chain_b) > 1 else ()

    spent = 0
    d1 = len(gens)

    def attempt(images: list[linalg.Vec]):
        word_img: list[linalg.Vec] = [B.unit]
        for parent, gi in nodes[1:]:
            word_img.append(B.mul_coords(word_img[parent], images[gi]))
        L = tuple(word_img)
        M = linalg.mat_mul(cinv, L, p)
        if linalg.rank(M, p) != A.rank:
            return None
        if not check_homomorphism(A, B, M):
            return None
        return M

    def recurse(pos: int, chosen: list[linalg.Vec], indep: linalg.Mat):
        nonlocal spent
        for h in pools[pos]:
            spent += 1
            if spent > budget:
                raise _BudgetStop
            grown = linalg.rref(list(indep) + [h], p)
            if len(grown) == len(indep):
                continue  # dependent mod m^2 and earlier picks
            chosen.append(h)
            if pos + 1 == d1:
                M = attempt(chosen)
                if M is not None:
                    chosen.pop()
                    return M
            else:
                M = recurse(pos + 1, chosen, grown)
                if M is not None:
                    chosen.pop()
                    return M
            chosen.pop()
        return None

    try:
        if d1 == 0:
            # rank-1 algebras: the unit map
            M = attempt([])
            witness = M
        else:
            witness = recurse(0, [], linalg.rref(m2b, p))
    except _BudgetStop:
        return IsoResult("undecided", "search", f"budget {budget} exhausted"), None
    if witness is None:
        return (
            IsoResult(
                "no",
                "search",
                f"generator-image search exhausted ({spent} candidates)",
            ),
            None,
        )
    return IsoResult("yes", "search", f"{spent} candidates tried", witness), witness


def is_isomorphic(A: FiniteAlgebra, B: FiniteAlgebra, budget: int = DEFAULT_BUDGET) -> IsoResult:
    """Decide A ~ B for local algebras; 'undecided' only on budget stop."""
    sig_a, sig_b = invariant_signature(A), invariant_signature(B)
    if sig_a != sig_b:
        return IsoResult(
            "no", "invariants", f"(rank, d, ann-chain) differ: {sig_a} vs {sig_b}"
        )
    if len(A.power_chain()) <= 1 and len(B.power_chain()) <= 1:
        witness = _square_zero_witness(A, B)
        assert check_homomorphism(A, B, witness)
        return IsoResult("yes", "radical-square-zero", witness=witness)
    if structural_profile(A) != structural_profile(B):
        return IsoResult("no", "profile", "radical element profiles differ")
    result, witness = _bounded_search(A, B, budget)
    if witness is not None:
        assert check_homomorphism(A, B, witness)
    return result


def verify_explicit_iso(
    phi: dict[str, str | Polynomial],
    psi: dict[str, str | Polynomial],
    A: FiniteAlgebra,
    B: FiniteAlgebra,
) -> bool:
    """Check a pair of variable-substitution maps is a mutually inverse
    algebra isomorphism between two presented algebras."""
    pres_a = A.presentation
    pres_b = B.presentation
    if pres_a is None or pres_b is None:
        raise ValueError("explicit maps need presented algebras")
    ring_a, ring_b = pres_a.ideal.ring, pres_b.ideal.ring

    phi_imgs = {
        v: (ring_b.parse(img) if isinstance(img, str) else img) for v, img in phi.items()
    }
    psi_imgs = {
        v: (ring_a.parse(img) if isinstance(img, str) else img) for v, img in psi.items()
    }

    for g in pres_a.ideal.generators:
        if not pres_b.ideal.contains(g.substitute(phi_imgs)):
            return False
    for g in pres_b.ideal.generators:
        if not pres_a.ideal.contains(g.substitute(psi_imgs)):
            return False

    for mono in pres_a.monomials:
        f = Polynomial(ring_a, {mono: 1})
        back = pres_a.ideal.normal_form(f.substitute(phi_imgs).substitute(psi_imgs))
        if back != f:
            return False
    for mono in pres_b.monomials:
        f = Polynomial(ring_b, {mono: 1})
        back = pres_b.ideal.normal_form(f.substitute(psi_imgs).substitute(phi_imgs))
        if back != f:
            return False
    return True
