"""Multivariate polynomials over a prime field.

A monomial is a dense exponent tuple indexed by the ring's variable list; a
polynomial maps monomials to nonzero coefficients.  Term orders are the two
the engine needs: degrevlex (default) and lex, optionally with a custom
variable priority.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator

from .field import PrimeField

Monomial = tuple[int, ...]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))

def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))

def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """Term order.  `priority` permutes variable significance: priority[0]
    is the index of the most significant variable (default: declaration
    order)."""

    kind: str = "degrevlex"
    priority: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError(f"unknown order {self.kind!r}")

    def key(self, m: Monomial):
        e = m if self.priority is None else tuple(m[i] for i in self.priority)
        if self.kind == "lex":
            return e
        return (sum(e), tuple(-x for x in reversed(e)))

    def cmp_desc(self, monos) -> list[Monomial]:
        return sorted(monos, key=self.key, reverse=True)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class PolyRing:
    field: PrimeField
    variables: tuple[str, ...]
    order: MonomialOrder = dc_field(default=DEGREVLEX)

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: int) -> Polynomial:
        c %= self.field.p
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> Polynomial:
        i = self.variables.index(name)
        expo = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {expo: 1})

    def monomial(self, expo: Monomial, coeff: int = 1) -> Polynomial:
        return Polynomial(self, {tuple(expo): coeff % self.field.p})

    def parse(self, text: str) -> Polynomial:
        from .parser import parse
        return parse(text, self)

    def __repr__(self) -> str:
        return f"F_{self.field.p}[{','.join(self.variables)}]"


class Polynomial:
    """Immutable-by-convention sparse polynomial; zero coefficients never
    stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[Monomial, int]):
        self.ring = ring
        p = ring.field.p
        clean = {}
        for m, c in terms.items():
            c %= p
            if c:
                clean[m] = c
        self.terms = clean

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading(self, order: MonomialOrder | None = None) -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        order = order or self.ring.order
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self.scale(self.ring.field.inv(c))

    def iter_terms_desc(self, order: MonomialOrder | None = None) -> Iterator[tuple[Monomial, int]]:
        order = order or self.ring.order
        for m in sorted(self.terms, key=order.key, reverse=True):
            yield m, self.terms[m]

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial(self.ring, acc)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) - c
        return Polynomial(self.ring, acc)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def scale(self, c: int) -> Polynomial:
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(self.ring, acc)

    def mul_term(self, m: Monomial, c: int) -> Polynomial:
        return Polynomial(
            self.ring, {mono_mul(mm, m): cc * c for mm, cc in self.terms.items()}
        )

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, images: dict[str, Polynomial]) -> Polynomial:
        """Ring map defined by variable images (variables absent from
        `images` must not occur).  Target ring is that of the images."""
        target = next(iter(images.values())).ring
        out = target.zero()
        for m, c in self.terms.items():
            term = target.constant(c)
            for vi, e in enumerate(m):
                if e == 0:
                    continue
                name = self.ring.variables[vi]
                if name not in images:
                    raise KeyError(f"no image for variable {name}")
                term = term * images[name] ** e
            out = out + term
        return out

    # -- identity --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def render(self) -> str:
        """Canonical display string; reparses to the same polynomial."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.iter_terms_desc():
            factors = []
            for vi, e in enumerate(m):
                if e == 1:
                    factors.append(self.ring.variables[vi])
                elif e > 1:
                    factors.append(f"{self.ring.variables[vi]}^{e}")
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(c)] + factors)
            parts.append(body)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"<{self.render()} in {self.ring!r}>"
