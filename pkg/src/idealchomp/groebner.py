"""Buchberger's algorithm and quotient-ring bases.

Keeps to the classical algorithm with the product (coprime leading terms)
and chain criteria; the ideals in play are tiny, so no further selection
machinery is warranted.  All reductions are full normal forms, making the
reduced basis canonical for a fixed term order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .poly import (
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_SPAIR_BUDGET = 20_000


class BudgetExceeded(RuntimeError):
    """S-pair limit hit before the basis stabilized."""


class InfiniteRank(ValueError):
    """The quotient ring is not finite-dimensional over the base field."""


def normal_form(f: Polynomial, basis, order: MonomialOrder | None = None) -> Polynomial:
    """Full remainder of f on division by `basis` (every term reduced)."""
    order = order or f.ring.order
    ring = f.ring
    p = ring.field.p
    leads = [(g.leading(order), g) for g in basis if not g.is_zero()]
    rem = ring.zero()
    h = f
    while not h.is_zero():
        hm, hc = h.leading(order)
        hit = False
        for (gm, gc), g in leads:
            if mono_divides(gm, hm):
                q = mono_div(hm, gm)
                factor = (hc * pow(gc, p - 2, p)) % p
                h = h - g.mul_term(q, factor)
                hit = True
                break
        if not hit:
            rem = rem + ring.monomial(hm, hc)
            h = h - ring.monomial(hm, hc)
    return rem


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    fm, fc = f.leading(order)
    gm, gc = g.leading(order)
    p = f.ring.field.p
    lcm = mono_lcm(fm, gm)
    left = f.mul_term(mono_div(lcm, fm), pow(fc, p - 2, p))
    right = g.mul_term(mono_div(lcm, gm), pow(gc, p - 2, p))
    return left - right


def buchberger(gens, order: MonomialOrder | None = None,
               budget: int = DEFAULT_SPAIR_BUDGET) -> tuple[Polynomial, ...]:
    """Reduced Groebner basis of the ideal generated by `gens`.

    Raises BudgetExceeded after `budget` S-pair reductions.  The result is
    sorted ascending by leading monomial so equal ideals (same ring, same
    order) yield identical tuples.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    ring = gens[0].ring
    order = order or ring.order
    G: list[Polynomial] = []
    for g in gens:
        G.append(g.monic(order))
    pairs = {(i, j) for i in range(len(G)) for j in range(i)}
    done: set[frozenset[int]] = set()
    spent = 0

    def lead(i: int) -> Monomial:
        return G[i].leading(order)[0]

    while pairs:
        # normal selection: smallest lcm degree first, deterministic tiebreak
        i, j = min(pairs, key=lambda ij: (mono_degree(mono_lcm(lead(ij[0]), lead(ij[1]))), ij))
        pairs.discard((i, j))
        done.add(frozenset((i, j)))
        li, lj = lead(i), lead(j)
        lcm = mono_lcm(li, lj)
        # product criterion
        if lcm == mono_mul(li, lj):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(lead(k), lcm) \
                    and frozenset((i, k)) in done and frozenset((j, k)) in done:
                skip = True
                break
        if skip:
            continue
        spent += 1
        if spent > budget:
            raise BudgetExceeded(f"S-pair budget {budget} exceeded")
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if r.is_zero():
            continue
        G.append(r.monic(order))
        new = len(G) - 1
        pairs.update((new, t) for t in range(new))

    # minimalize: drop members whose lead is divisible by a smaller lead
    # (divisibility implies order-comparability, so one ascending pass works)
    G.sort(key=lambda g: order.key(g.leading(order)[0]))
    keep: list[Polynomial] = []
    for g in G:
        gm = g.leading(order)[0]
        if not any(mono_divides(h.leading(order)[0], gm) for h in keep):
            keep.append(g)
    # inter-reduce to the unique reduced basis
    reduced: list[Polynomial] = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order)
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading(order)[0]))
    return tuple(reduced)


@dataclass
class PolyIdeal:
    """An ideal of a polynomial ring, with its reduced basis cached."""

    ring: PolyRing
    generators: tuple[Polynomial, ...]
    _gb: tuple[Polynomial, ...] | None = None

    def __init__(self, ring: PolyRing, generators, budget: int = DEFAULT_SPAIR_BUDGET):
        self.ring = ring
        self.generators = tuple(generators)
        self.budget = budget
        self._gb = None

    @classmethod
    def from_strings(cls, ring: PolyRing, gens) -> PolyIdeal:
        return cls(ring, [ring.parse(s) for s in gens])

    def groebner(self) -> tuple[Polynomial, ...]:
        if self._gb is None:
            self._gb = buchberger(self.generators, self.ring.order, self.budget)
        return self._gb

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.groebner(), self.ring.order)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_whole_ring(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].total_degree() == 0


def ideal_equal(a: PolyIdeal, b: PolyIdeal) -> bool:
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    return a.groebner() == b.groebner()


def quotient_basis(ideal: PolyIdeal) -> tuple[Monomial, ...]:
    """Standard monomials of R/I, ascending in the ring's order.

    Raises InfiniteRank unless the quotient is finite-dimensional, i.e.
    some pure power of every variable leads a basis member.
    """
    order = ideal.ring.order
    gb = ideal.groebner()
    leads = [g.leading(order)[0] for g in gb]
    n = ideal.ring.nvars
    bounds = [None] * n
    for lm in leads:
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    if any(b is None for b in bounds):
        missing = [ideal.ring.variables[i] for i, b in enumerate(bounds) if b is None]
        raise InfiniteRank(f"no pure power of {', '.join(missing)} among leading terms")
    out = []
    for expo in iter_product(*(range(b) for b in bounds)):
        if not any(mono_divides(lm, expo) for lm in leads):
            out.append(expo)
    out.sort(key=order.key)
    return tuple(out)
