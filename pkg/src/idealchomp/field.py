"""Prime field arithmetic.

Every quantity in the engine lives over F_p for a small prime p.  Elements
carry a reference to their field so that mixed-modulus arithmetic is caught
at the point of use instead of producing silently wrong residues.
"""

from __future__ import annotations

from dataclasses import dataclass


class ModulusMismatch(ValueError):
    """Two elements from different prime fields were combined."""


class DivisionByZero(ZeroDivisionError):
    """Multiplicative inverse of zero was requested."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p, p prime."""

    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(value % self.p, self)

    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self)

    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1 % self.p, self)

    def elements(self):
        """All p elements, in residue order."""
        return (PrimeFieldElement(v, self) for v in range(self.p))

    def inv(self, value: int) -> int:
        """Inverse of a residue, as a plain int.  Fermat: v^(p-2) mod p."""
        value %= self.p
        if value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}")
        return pow(value, self.p - 2, self.p)

    def __repr__(self) -> str:
        return f"F_{self.p}"


@dataclass(frozen=True)
class PrimeFieldElement:
    value: int
    field: PrimeField

    def _check(self, other: PrimeFieldElement) -> None:
        if self.field.p != other.field.p:
            raise ModulusMismatch(
                f"cannot combine F_{self.field.p} and F_{other.field.p} elements"
            )

    def __add__(self, other: PrimeFieldElement) -> PrimeFieldElement:
        self._check(other)
        return PrimeFieldElement((self.value + other.value) % self.field.p, self.field)

    def __sub__(self, other: PrimeFieldElement) -> PrimeFieldElement:
        self._check(other)
        return PrimeFieldElement((self.value - other.value) % self.field.p, self.field)

    def __mul__(self, other: PrimeFieldElement) -> PrimeFieldElement:
        self._check(other)
        return PrimeFieldElement((self.value * other.value) % self.field.p, self.field)

    def __neg__(self) -> PrimeFieldElement:
        return PrimeFieldElement((-self.value) % self.field.p, self.field)

    def inv(self) -> PrimeFieldElement:
        return PrimeFieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other: PrimeFieldElement) -> PrimeFieldElement:
        self._check(other)
        return self * other.inv()

    def is_zero(self) -> bool:
        return self.value == 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"
