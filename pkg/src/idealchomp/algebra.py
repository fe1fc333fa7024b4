"""Finite-rank commutative algebras over F_p.

An algebra is held as structure constants over an explicit basis.  The ones
built from polynomial presentations keep their quotient-ring data so that
elements can be parsed from and rendered to polynomial text; quotient and
product constructions work purely at the structure-constant level.

Ideals are canonical RREF row spaces, which makes them directly usable as
dictionary keys in the solver and comparison-free to deduplicate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .field import PrimeField
from .groebner import PolyIdeal, quotient_basis
from .poly import Monomial, Polynomial, mono_mul


class QuotientIsZeroRing(Exception):
    """The ideal is the whole ring; the quotient has no unit to offer."""


class NotLocal(ValueError):
    """Operation requires a local algebra but the non-units do not form a
    subspace."""


@dataclass(frozen=True)
class IdealSubspace:
    """An ideal, stored as the canonical RREF basis of its row space."""

    rows: linalg.Mat

    @property
    def dim(self) -> int:
        return len(self.rows)

    def key(self) -> linalg.Mat:
        return self.rows


def _render_monomial(variables: tuple[str, ...], m: Monomial) -> str:
    if not any(m):
        return "1"
    parts = []
    for v, e in zip(variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


class FiniteAlgebra:
    """Commutative unital algebra of finite rank over F_p."""

    def __init__(
        self,
        field: PrimeField,
        labels: tuple[str, ...],
        structure: tuple[tuple[linalg.Vec, ...], ...],
        unit: linalg.Vec,
        presentation: _Presentation | None = None,
        factors: tuple[FiniteAlgebra, FiniteAlgebra] | None = None,
    ):
        self.field = field
        self.labels = labels
        self.structure = structure
        self.unit = unit
        self.presentation = presentation
        self.factors = factors
        n = len(labels)
        if len(structure) != n or any(len(r) != n for r in structure):
            raise ValueError("structure constants do not match the basis size")
        # column-multiplication matrices: a @ bymat[j] == a * basis_j
        self._bymat: list[linalg.Mat] = [
            tuple(structure[i][j] for i in range(n)) for j in range(n)
        ]
        self._tensor = np.array(
            [[structure[i][j] for j in range(n)] for i in range(n)], dtype=np.int64
        ).reshape(n, n * n)
        self._nonunit_info: tuple[bool, linalg.Mat] | None = None
        self._power_chain: list[linalg.Mat] | None = None
        self._profiles: dict[linalg.Vec, tuple[int, int, int]] | None = None

    # -- basics ------------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def p(self) -> int:
        return self.field.p

    def zero_coords(self) -> linalg.Vec:
        return (0,) * self.rank

    def element(self, coords) -> AlgElement:
        coords = tuple(v % self.p for v in coords)
        if len(coords) != self.rank:
            raise ValueError("coordinate length mismatch")
        return AlgElement(self, coords)

    def one(self) -> AlgElement:
        return AlgElement(self, self.unit)

    def mul_coords(self, a: linalg.Vec, b: linalg.Vec) -> linalg.Vec:
        n = self.rank
        p = self.p
        acc = [0] * n
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = self.structure[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                c = ai * bj
                vec = row[j]
                for k in range(n):
                    if vec[k]:
                        acc[k] += c * vec[k]
        return tuple(v % p for v in acc)

    def mult_matrix(self, a: linalg.Vec) -> linalg.Mat:
        """Matrix of x -> x*a in row convention (apply as x @ M)."""
        n = self.rank
        p = self.p
        rows = []
        for i in range(n):
            acc = [0] * n
            for j, aj in enumerate(a):
                if aj:
                    vec = self.structure[i][j]
                    for k in range(n):
                        acc[k] += aj * vec[k]
            rows.append(tuple(v % p for v in acc))
        return tuple(rows)

    def is_unit(self, a: linalg.Vec) -> bool:
        return linalg.rank(self.mult_matrix(a), self.p) == self.rank

    def all_coords(self):
        return itertools.product(range(self.p), repeat=self.rank)

    # -- ideals --------------------------------------------------------------

    def zero_ideal(self) -> IdealSubspace:
        return IdealSubspace(())

    def full_ideal(self) -> IdealSubspace:
        return IdealSubspace(linalg.identity(self.rank))

    def is_full(self, ideal: IdealSubspace) -> bool:
        return ideal.dim == self.rank

    def _coords_of(self, a) -> linalg.Vec:
        if isinstance(a, AlgElement):
            if a.algebra is not self:
                raise ValueError("element belongs to a different algebra")
            return a.coords
        return tuple(a)

    def principal_rows(self, a) -> list[linalg.Vec]:
        """Spanning rows of a*A (an ideal already: the algebra is unital)."""
        a = self._coords_of(a)
        return [self._apply(a, j) for j in range(self.rank)]

    def _apply(self, a: linalg.Vec, j: int) -> linalg.Vec:
        p = self.p
        mat = self._bymat[j]
        n = self.rank
        acc = [0] * n
        for i, ai in enumerate(a):
            if ai:
                row = mat[i]
                for k in range(n):
                    if row[k]:
                        acc[k] += ai * row[k]
        return tuple(v % p for v in acc)

    def principal_ideal(self, a) -> IdealSubspace:
        return IdealSubspace(linalg.rref(self.principal_rows(a), self.p))

    def ideal_add(self, ideal: IdealSubspace, a) -> IdealSubspace:
        """Smallest ideal containing `ideal` and the element `a`."""
        rows = list(ideal.rows) + self.principal_rows(a)
        return IdealSubspace(linalg.rref(rows, self.p))

    def ideal_contains(self, ideal: IdealSubspace, a) -> bool:
        return linalg.in_rowspace(self._coords_of(a), ideal.rows, self.p)

    def ideal_from_elements(self, vecs) -> IdealSubspace:
        out = self.zero_ideal()
        for v in vecs:
            out = self.ideal_add(out, tuple(v))
        return out

    # -- locality and the radical filtration --------------------------------

    def _analyze_nonunits(self) -> tuple[bool, linalg.Mat]:
        if self._nonunit_info is not None:
            return self._nonunit_info
        n, p = self.rank, self.p
        count = p ** n
        vecs = np.array(list(self.all_coords()), dtype=np.int64)
        mats = (vecs @ self._tensor).reshape(count, n, n) % p
        _, dims = linalg.rref_batch(mats, p)
        nonunit_rows = [tuple(int(x) for x in v) for v in vecs[dims < n]]
        span = linalg.rref(nonunit_rows, p)
        is_subspace = len(nonunit_rows) == p ** len(span)
        self._nonunit_info = (is_subspace, span)
        return self._nonunit_info

    def is_local(self) -> bool:
        ok, _ = self._analyze_nonunits()
        return ok

    def radical(self) -> IdealSubspace:
        """Maximal ideal of a local algebra (= the set of non-units)."""
        ok, span = self._analyze_nonunits()
        if not ok:
            raise NotLocal("non-units do not form a subspace")
        return IdealSubspace(span)

    def power_chain(self) -> list[linalg.Mat]:
        """[m, m^2, m^3, ...] as RREF bases, down to but excluding zero."""
        if self._power_chain is None:
            m = self.radical().rows
            chain = []
            cur = m
            while cur:
                chain.append(cur)
                prods = [
                    self.mul_coords(u, v) for u in m for v in cur
                ]
                cur = linalg.rref(prods, self.p)
            self._power_chain = chain
        return self._power_chain

    def d_vector(self) -> tuple[int, ...]:
        """Dimensions of successive radical-power quotients m^i / m^{i+1}."""
        chain = self.power_chain()
        dims = [len(c) for c in chain] + [0]
        d = tuple(dims[i] - dims[i + 1] for i in range(len(chain)))
        assert 1 + sum(d) == self.rank
        return d

    def annihilator_dims(self) -> tuple[int, ...]:
        """dim ann(m^i) for each nonzero radical power m^i."""
        out = []
        for rows in self.power_chain():
            functionals = []
            for v in rows:
                mat = self.mult_matrix(v)
                for k in range(self.rank):
                    functionals.append(tuple(mat[i][k] for i in range(self.rank)))
            out.append(len(linalg.nullspace(functionals, self.p, self.rank)))
        return tuple(out)

    def radical_elements(self) -> list[linalg.Vec]:
        """All elements of m, deterministic order."""
        rows = self.radical().rows
        p = self.p
        out = []
        for coeffs in itertools.product(range(p), repeat=len(rows)):
            v = [0] * self.rank
            for c, row in zip(coeffs, rows):
                if c:
                    for k in range(self.rank):
                        v[k] += c * row[k]
            out.append(tuple(x % p for x in v))
        return sorted(set(out))

    # -- quotients and products ---------------------------------------------

    def quotient_by(self, ideal: IdealSubspace) -> tuple[FiniteAlgebra, linalg.Mat]:
        """A/I together with the projection matrix (apply as coords @ P)."""
        if self.is_full(ideal):
            raise QuotientIsZeroRing("quotient by the whole ring")
        n, p = self.rank, self.p
        pivots = [next(i for i, v in enumerate(r) if v) for r in ideal.rows]
        free = [c for c in range(n) if c not in pivots]
        q = len(free)

        def project(vec: linalg.Vec) -> linalg.Vec:
            red = linalg.reduce_mod(vec, ideal.rows, p)
            if red is None:
                return (0,) * q
            return tuple(red[c] for c in free)

        proj = tuple(project(tuple(1 if k == i else 0 for k in range(n))) for i in range(n))
        structure = tuple(
            tuple(
                project(self.mul_coords(self._basis_vec(free[i]), self._basis_vec(free[j])))
                for j in range(q)
            )
            for i in range(q)
        )
        quot = FiniteAlgebra(
            self.field,
            tuple(self.labels[c] for c in free),
            structure,
            project(self.unit),
        )
        return quot, proj

    def _basis_vec(self, i: int) -> linalg.Vec:
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def direct_product(self, other: FiniteAlgebra) -> FiniteAlgebra:
        if self.field.p != other.field.p:
            raise ValueError("factors over different fields")
        n, m = self.rank, other.rank
        zero_m = (0,) * m
        zero_n = (0,) * n
        structure = []
        for i in range(n + m):
            row = []
            for j in range(n + m):
                if i < n and j < n:
                    row.append(self.structure[i][j] + zero_m)
                elif i >= n and j >= n:
                    row.append(zero_n + other.structure[i - n][j - n])
                else:
                    row.append(zero_n + zero_m)
            structure.append(tuple(row))
        labels = tuple(f"{l}." for l in self.labels) + tuple(f".{l}" for l in other.labels)
        return FiniteAlgebra(
            self.field,
            labels,
            tuple(structure),
            self.unit + other.unit,
            factors=(self, other),
        )

    # -- polynomial interface -------------------------------------------------

    def from_poly(self, f: Polynomial) -> AlgElement:
        pres = self._require_presentation()
        nf = pres.ideal.normal_form(f)
        coords = [0] * self.rank
        for m, c in nf.terms.items():
            coords[pres.index[m]] = c
        return AlgElement(self, tuple(coords))

    def parse_element(self, text: str) -> AlgElement:
        pres = self._require_presentation()
        return self.from_poly(pres.ideal.ring.parse(text))

    def render_coords(self, coords: linalg.Vec) -> str:
        if self.factors is not None:
            a, b = self.factors
            return (
                f"({a.render_coords(coords[: a.rank])},"
                f" {b.render_coords(coords[a.rank :])})"
            )
        if self.presentation is not None:
            pres = self.presentation
            f = Polynomial(
                pres.ideal.ring,
                {m: c for m, c in zip(pres.monomials, coords) if c},
            )
            return f.render()
        parts = [
            (f"{self.labels[i]}" if c == 1 else f"{c}*{self.labels[i]}")
            for i, c in enumerate(coords)
            if c
        ]
        return " + ".join(parts) if parts else "0"

    def _require_presentation(self) -> _Presentation:
        if self.presentation is None:
            raise ValueError("algebra has no polynomial presentation")
        return self.presentation

    def __repr__(self) -> str:
        if self.presentation is not None:
            ring = self.presentation.ideal.ring
            gens = ", ".join(g.render() for g in self.presentation.ideal.generators)
            return f"F_{self.p}[{','.join(ring.variables)}]/({gens})"
        return f"<algebra of rank {self.rank} over F_{self.p}>"


@dataclass(frozen=True)
class _Presentation:
    ideal: PolyIdeal
    monomials: tuple[Monomial, ...]
    index: dict  # Monomial -> basis position

    def __hash__(self):
        return hash((id(self.ideal), self.monomials))


@dataclass(frozen=True)
class AlgElement:
    algebra: FiniteAlgebra
    coords: linalg.Vec

    def __add__(self, other: AlgElement) -> AlgElement:
        self._check(other)
        p = self.algebra.p
        return AlgElement(
            self.algebra, tuple((a + b) % p for a, b in zip(self.coords, other.coords))
        )

    def __mul__(self, other: AlgElement) -> AlgElement:
        self._check(other)
        return AlgElement(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def __neg__(self) -> AlgElement:
        p = self.algebra.p
        return AlgElement(self.algebra, tuple((-a) % p for a in self.coords))

    def scale(self, c: int) -> AlgElement:
        p = self.algebra.p
        return AlgElement(self.algebra, tuple((c * a) % p for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_unit(self) -> bool:
        return self.algebra.is_unit(self.coords)

    def render(self) -> str:
        return self.algebra.render_coords(self.coords)

    def _check(self, other: AlgElement) -> None:
        if self.algebra is not other.algebra:
            raise ValueError("elements of different algebras")

    def __repr__(self) -> str:
        return f"<{self.render()}>"


def from_presentation(ideal: PolyIdeal) -> FiniteAlgebra:
    """Quotient F_p[vars]/I as a structure-constant algebra.

    Basis: the standard monomials, ascending in the ring's term order (so
    the constant monomial sits at index 0).
    """
    monos = quotient_basis(ideal)
    if not monos:
        raise QuotientIsZeroRing("ideal contains a unit")
    ring = ideal.ring
    index = {m: i for i, m in enumerate(monos)}
    n = len(monos)
    structure = []
    for mi in monos:
        row = []
        for mj in monos:
            prod = Polynomial(ring, {mono_mul(mi, mj): 1})
            nf = ideal.normal_form(prod)
            coords = [0] * n
            for m, c in nf.terms.items():
                coords[index[m]] = c
            row.append(tuple(coords))
        structure.append(tuple(row))
    labels = tuple(_render_monomial(ring.variables, m) for m in monos)
    unit = tuple(1 if i == index[(0,) * ring.nvars] else 0 for i in range(n))
    pres = _Presentation(ideal, monos, index)
    return FiniteAlgebra(ideal.ring.field, labels, tuple(structure), unit, presentation=pres)
