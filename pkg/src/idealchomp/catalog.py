"""Bundled catalog of small local algebras and their known reductions.

Entries marked ``only_char_2`` / ``only_char_3`` exist as distinct
isomorphism classes only over fields of that characteristic and are
filtered out everywhere else.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations_with_replacement

from .algebra import FiniteAlgebra, from_presentation
from .field import PrimeField
from .groebner import PolyIdeal
from .poly import Polynomial, PolyRing


class UnknownRing(KeyError):
    """Requested catalog id does not exist."""


class CharMismatch(ValueError):
    """Catalog entry is not defined over the requested characteristic."""


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    n: int
    d: tuple[int, ...]
    vars: tuple[str, ...]
    gens: tuple[str, ...]
    char: str
    win: str

    def applies_to(self, p: int) -> bool:
        if self.char == "any":
            return True
        if self.char == "only_char_2":
            return p == 2
        if self.char == "only_char_3":
            return p == 3
        raise ValueError(f"unknown char tag {self.char!r}")

    def presentation(self) -> str:
        return f"K[{','.join(self.vars)}]/({', '.join(self.gens)})"


@dataclass(frozen=True)
class ReductionRow:
    source: str
    move: str
    target: str


@lru_cache(maxsize=1)
def _raw() -> dict:
    text = resources.files("idealchomp").joinpath("data/catalog.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=1)
def _all_entries() -> tuple[CatalogEntry, ...]:
    return tuple(
        CatalogEntry(
            id=e["id"],
            n=e["n"],
            d=tuple(e["d"]),
            vars=tuple(e["vars"]),
            gens=tuple(e["gens"]),
            char=e["char"],
            win=e["win"],
        )
        for e in _raw()["entries"]
    )


@lru_cache(maxsize=1)
def _all_reductions() -> tuple[ReductionRow, ...]:
    return tuple(
        ReductionRow(source=r["source"], move=r["move"], target=r["target"])
        for r in _raw()["reductions"]
    )


def all_entries() -> tuple[CatalogEntry, ...]:
    """Every entry regardless of characteristic, in catalog order."""
    return _all_entries()


def load_catalog(p: int) -> list[CatalogEntry]:
    """All entries defined over F_p, in catalog order."""
    PrimeField(p)
    return [e for e in _all_entries() if e.applies_to(p)]


def load_reductions(p: int) -> list[ReductionRow]:
    PrimeField(p)
    entries = {e.id: e for e in _all_entries()}
    return [r for r in _all_reductions() if entries[r.source].applies_to(p)]


def entry(ring_id: str) -> CatalogEntry:
    for e in _all_entries():
        if e.id == ring_id:
            return e
    raise UnknownRing(ring_id)


@lru_cache(maxsize=None)
def build_algebra(ring_id: str, p: int) -> FiniteAlgebra:
    """Construct the catalog ring over F_p.

    The result is cached per (id, p); callers share one FiniteAlgebra
    instance, which also shares its solved game tree.
    """
    e = entry(ring_id)
    if not e.applies_to(p):
        raise CharMismatch(f"{ring_id} is only defined in characteristic {e.char[-1]}")
    ring = PolyRing(PrimeField(p), e.vars)
    ideal = PolyIdeal(ring, tuple(ring.parse(g) for g in e.gens))
    algebra = from_presentation(ideal)
    if algebra.rank != e.n:
        raise AssertionError(f"{ring_id}/F_{p}: rank {algebra.rank}, catalog says {e.n}")
    return algebra


def parse_ring_descriptor(text: str, p: int) -> FiniteAlgebra:
    """Build an algebra from a description like ``K[x,y]/(x^2, x*y, y^2)``.

    A trailing ``^k`` on the generator list raises the whole tuple to the
    k-th power, so ``K[x,y]/(x,y)^2`` means all degree-2 products.
    """
    text = text.strip()
    if not text.startswith("K[") or "]" not in text:
        raise ValueError(f"cannot parse ring descriptor {text!r}")
    close = text.index("]")
    names = tuple(v.strip() for v in text[2:close].split(",") if v.strip())
    rest = text[close + 1 :].lstrip()
    if not rest.startswith("/"):
        raise ValueError("expected '/' after variable list")
    rest = rest[1:].lstrip()
    if not rest.startswith("("):
        raise ValueError("expected '(' opening the generator list")
    depth = 0
    end = -1
    for i, ch in enumerate(rest):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                end = i
                break
    if end < 0:
        raise ValueError("unbalanced parentheses in generator list")
    body = rest[1:end]
    tail = rest[end + 1 :].strip()
    power = 1
    if tail:
        if not tail.startswith("^"):
            raise ValueError(f"unexpected trailing text {tail!r}")
        power = int(tail[1:])
        if power < 1:
            raise ValueError("power must be positive")

    pieces: list[str] = []
    depth = 0
    current = []
    for ch in body:
        if ch == "," and depth == 0:
            pieces.append("".join(current))
            current = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        current.append(ch)
    pieces.append("".join(current))

    ring = PolyRing(PrimeField(p), names)
    gens = [ring.parse(s) for s in pieces if s.strip()]
    if not gens:
        raise ValueError("empty generator list")
    if power > 1:
        gens = [
            _product(ring, combo)
            for combo in combinations_with_replacement(gens, power)
        ]
    return from_presentation(PolyIdeal(ring, tuple(gens)))


def _product(ring: PolyRing, polys) -> Polynomial:
    acc = ring.one()
    for f in polys:
        acc = acc * f
    return acc
