"""Special ideals of F_p[x,y]/(x^2) and the common-root response.

Henson's condition asks for an element a of a domain R such that R/(a)
is a PID but not a field; F_p[x,y] satisfies it with a = x.  Rings of
Krull dimension three or more never do: killing one element cannot make
every quotient ideal principal.  This module stays at the polynomial
level (the ambient rings have infinite rank, so nothing here is solved
exhaustively): it recognises the ideals m_b^k = ((y-b)^k, x(y-b)^{k-1})
modulo x^2 and produces the pairing response to a move with a common
root.

Throughout, the first ring variable squares to zero and the second is
the PID direction; conventionally x and y.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import PrimeField
from .groebner import PolyIdeal, ideal_equal
from .poly import Polynomial, PolyRing


@dataclass(frozen=True)
class SpecialIdealWitness:
    b: int
    k: int


def _special_ideal(ring: PolyRing, b: int, k: int) -> PolyIdeal:
    x = ring.var(ring.variables[0])
    y = ring.var(ring.variables[1])
    u = y - ring.constant(b)
    return PolyIdeal(ring, (x * x, u**k, x * u ** (k - 1)))


def is_special(ideal: PolyIdeal) -> SpecialIdealWitness | None:
    """Match ideal against m_b^k for b in F_p, k up to the generator degree bound.

    Requires x^2 among the relations; the bound is sharp because m_b^k
    needs a degree-k generator.
    """
    ring = ideal.ring
    if len(ring.variables) != 2:
        raise ValueError("expected a two-variable ring")
    x = ring.var(ring.variables[0])
    if not ideal.contains(x * x):
        raise ValueError("ideal must contain the square of the first variable")
    p = ring.field.p
    bound = max(g.total_degree() for g in ideal.generators)
    for k in range(1, bound + 1):
        for b in range(p):
            if ideal_equal(ideal, _special_ideal(ring, b, k)):
                return SpecialIdealWitness(b=b, k=k)
    return None


def _split_mod_x2(f: Polynomial) -> tuple[dict[int, int], dict[int, int]]:
    """Coefficient tables of the x-free part and the x-linear part of f mod x^2."""
    part0: dict[int, int] = {}
    part1: dict[int, int] = {}
    for mono, coeff in f.terms.items():
        ex, ey = mono
        if ex == 0:
            part0[ey] = (part0.get(ey, 0) + coeff) % f.ring.field.p
        elif ex == 1:
            part1[ey] = (part1.get(ey, 0) + coeff) % f.ring.field.p
    return (
        {d: c for d, c in part0.items() if c},
        {d: c for d, c in part1.items() if c},
    )


def _eval(coeffs: dict[int, int], b: int, p: int) -> int:
    return sum(c * pow(b, d, p) for d, c in coeffs.items()) % p


def _divide_linear(coeffs: dict[int, int], b: int, p: int) -> dict[int, int]:
    """Synthetic division by (y - b); caller guarantees b is a root."""
    degree = max(coeffs)
    dense = [coeffs.get(d, 0) for d in range(degree + 1)]
    out = [0] * degree
    carry = 0
    for d in range(degree, 0, -1):
        carry = (dense[d] + carry * b) % p
        out[d - 1] = carry
    assert (dense[0] + carry * b) % p == 0
    return {d: c for d, c in enumerate(out) if c}


def _multiplicity(coeffs: dict[int, int], b: int, p: int) -> int:
    m = 0
    while coeffs and _eval(coeffs, b, p) == 0:
        coeffs = _divide_linear(coeffs, b, p)
        m += 1
    return m


def respond_common_root(f: Polynomial) -> Polynomial | None:
    """Pairing response to the move f = p(y) + x*q(y), working modulo x^2.

    Finds the least common root b of p and q over F_p; with
    s = mult_b(p) and t = mult_b(q), the response closes (x^2, f) up to
    a special ideal:

      s <= t, or q = 0:  (y-b)^s + x(y-b)^{s-1},  reaching m_b^s
      s > t:             (y-b)^{t+1},             reaching m_b^{t+1}

    The two-term form is unusable when s > t: there f is a multiple of
    it (or of nothing reachable), and the closed ideal sits strictly
    between m_b^{t+1} and m_b^t, which is not a power of m_b.  The pure
    power always lands on m_b^{t+1} because the x-linear part of f then
    supplies x(y-b)^t.  Returns None when no common root exists
    (including p = 0 identically); those moves fall outside the
    common-root case.
    """
    ring = f.ring
    if len(ring.variables) != 2:
        raise ValueError("expected a two-variable ring")
    p = ring.field.p
    part0, part1 = _split_mod_x2(f)
    if not part0 and not part1:
        raise ValueError("move is zero modulo x^2")
    if not part0:
        return None
    roots0 = [b for b in range(p) if _eval(part0, b, p) == 0]
    x = ring.var(ring.variables[0])
    y = ring.var(ring.variables[1])
    if part1:
        common = [b for b in roots0 if _eval(part1, b, p) == 0]
        if not common:
            return None
        b = common[0]
        s = _multiplicity(part0, b, p)
        t = _multiplicity(part1, b, p)
        u = y - ring.constant(b)
        if s <= t:
            k = s
            response = u**s + x * u ** (s - 1)
        else:
            k = t + 1
            response = u ** (t + 1)
    else:
        if not roots0:
            return None
        b = roots0[0]
        k = _multiplicity(part0, b, p)
        u = y - ring.constant(b)
        response = u**k + x * u ** (k - 1)

    witness = is_special(PolyIdeal(ring, (x * x, f, response)))
    assert witness == SpecialIdealWitness(b=b, k=k), (f, witness)
    return response


def verify_example_game(p: int = 5, response: str = "y-2") -> bool:
    """Scripted endgame check: after x^2 and x(y-1)+(y-2), answering y-2
    pins the position to the maximal ideal (x, y-2).

    Needs p >= 3 so the two roots stay distinct.  Returns False as soon
    as any step disagrees; the response argument exists so tests can
    confirm that a wrong answer is rejected.
    """
    if p < 3:
        raise ValueError("need p >= 3")
    ring = PolyRing(PrimeField(p), ("x", "y"))
    moves = (ring.parse("x^2"), ring.parse("x*(y-1) + (y-2)"), ring.parse(response))
    position = PolyIdeal(ring, moves)
    expected = PolyIdeal(ring, (ring.parse("x"), ring.parse("y-2")))
    if not ideal_equal(position, expected):
        return False
    witness = is_special(position)
    return witness is not None and witness.k == 1


def _univariate_gcd(a: dict[int, int], b: dict[int, int], p: int) -> dict[int, int]:
    field = PrimeField(p)
    while b:
        db, lb = max(b), b[max(b)]
        inv_lb = field.inv(lb)
        r = dict(a)
        while r and max(r) >= db:
            dr = max(r)
            factor = (r[dr] * inv_lb) % p
            for d, c in b.items():
                nd = d + dr - db
                r[nd] = (r.get(nd, 0) - factor * c) % p
                if r[nd] == 0:
                    del r[nd]
        a, b = b, r
    if a:
        inv = field.inv(a[max(a)])
        a = {d: (c * inv) % p for d, c in a.items()}
    return a


def henson_condition_examples() -> list[tuple[str, str]]:
    """Documented witnesses (F_p[x,y], x) with a spot check that the
    quotient by x behaves like a PID: pairs of univariate images reduce
    to their gcd.
    """
    pairs = (
        ("y^2 - 1", "y^2 + y"),
        ("y^3", "y^2 - y"),
        ("y^2 + 1", "y + 1"),
    )
    out: list[tuple[str, str]] = []
    for p in (2, 3, 5, 7):
        ring = PolyRing(PrimeField(p), ("x", "y"))
        x = ring.var("x")
        for fa, fb in pairs:
            a, b = ring.parse(fa), ring.parse(fb)
            ideal = PolyIdeal(ring, (x, a, b))
            ca = _split_mod_x2(a)[0]
            cb = _split_mod_x2(b)[0]
            g = _univariate_gcd(ca, cb, p)
            if g == {0: 1}:
                if not ideal.is_whole_ring():
                    raise AssertionError(f"coprime pair not closing to (1) mod {p}")
                continue
            rest = [h for h in ideal.groebner() if h.coeff((1, 0)) == 0]
            if len(rest) != 1 or _split_mod_x2(rest[0])[0] != g:
                raise AssertionError(f"quotient by x not principal on {fa}, {fb} mod {p}")
        out.append((f"F_{p}[x,y]", "x"))
    return out
