"""Prime field arithmetic, checked exhaustively for small p."""

import pytest

from idealchomp.field import DivisionByZero, ModulusMismatch, PrimeField

PRIMES = [2, 3, 5, 7]


@pytest.mark.parametrize("p", PRIMES)
def test_field_axioms_exhaustive(p):
    F = PrimeField(p)
    elems = list(F.elements())
    assert len(elems) == p
    for a in elems:
        assert (a + F.zero()).value == a.value
        assert (a * F.one()).value == a.value
        assert (a + (-a)).value == 0
        for b in elems:
            assert (a + b).value == (a.value + b.value) % p
            assert (a * b).value == (a.value * b.value) % p
            assert (a + b).value == (b + a).value
            assert (a * b).value == (b * a).value
            for c in elems:
                assert ((a + b) + c).value == (a + (b + c)).value
                assert ((a * b) * c).value == (a * (b * c)).value
                assert (a * (b + c)).value == (a * b + a * c).value


@pytest.mark.parametrize("p", PRIMES)
def test_inverses_exhaustive(p):
    F = PrimeField(p)
    for v in range(1, p):
        a = F(v)
        assert (a * a.inv()).value == 1
        assert (a / a).value == 1
    with pytest.raises(DivisionByZero):
        F.zero().inv()
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(DivisionByZero):
        F.one() / F.zero()


@pytest.mark.parametrize("p", PRIMES)
def test_subtraction_matches_additive_inverse(p):
    F = PrimeField(p)
    for a in F.elements():
        for b in F.elements():
            assert (a - b).value == (a + (-b)).value


def test_call_reduces_mod_p():
    F = PrimeField(5)
    assert F(7).value == 2
    assert F(-1).value == 4
    assert F(0).is_zero()
    assert not F(3).is_zero()


@pytest.mark.parametrize("n", [0, 1, 4, 6, 8, 9, 10, 12, 15, 100])
def test_non_prime_modulus_rejected(n):
    with pytest.raises(ValueError):
        PrimeField(n)


def test_mixed_modulus_rejected():
    a = PrimeField(2)(1)
    b = PrimeField(3)(1)
    with pytest.raises(ModulusMismatch):
        a + b
    with pytest.raises(ModulusMismatch):
        a * b
    with pytest.raises(ModulusMismatch):
        a - b


def test_char_two_one_is_its_own_negative():
    F = PrimeField(2)
    assert (-F.one()).value == 1
    assert F.one() + F.one() == F.zero()
