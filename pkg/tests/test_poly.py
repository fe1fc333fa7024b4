"""Polynomial arithmetic, term orders, and the text grammar."""

import random

import pytest

from idealchomp.field import PrimeField
from idealchomp.parser import ParseError
from idealchomp.poly import LEX, MonomialOrder, Polynomial, PolyRing


def ring(p=5, variables=("x", "y", "z"), order=None):
    if order is None:
        return PolyRing(PrimeField(p), variables)
    return PolyRing(PrimeField(p), variables, order)


# -- parsing ---------------------------------------------------------------


def test_parse_basic_forms():
    R = ring()
    x, y = R.var("x"), R.var("y")
    assert R.parse("x+y") == x + y
    assert R.parse("x - y") == x - y
    assert R.parse("2x") == x.scale(2)
    assert R.parse("2*x") == x.scale(2)
    assert R.parse("x^3") == x ** 3
    assert R.parse("x y") == x * y  # juxtaposition is multiplication
    assert R.parse("x(y)") == x * y
    assert R.parse("0") == R.zero()
    assert R.parse("7") == R.constant(2)


def test_adjacent_letters_form_one_identifier():
    # longest-match tokenization: "xy" is a single (unknown) name
    R = ring()
    with pytest.raises(ParseError) as e:
        R.parse("xy")
    assert e.value.pos == 0


def test_parse_precedence_and_grouping():
    R = ring()
    assert R.parse("x+y*z") == R.parse("x+(y*z)")
    assert R.parse("(x+y)*z") == R.parse("x*z+y*z")
    assert R.parse("(x+y)(x+y)") == R.parse("x^2+2*x*y+y^2")
    assert R.parse("x*y^2") == R.parse("x*(y^2)")
    assert R.parse("2(x+y)") == R.parse("2*x+2*y")


def test_exponent_binds_to_variables_only():
    # '^' after a parenthesized group is not part of the grammar
    with pytest.raises(ParseError) as e:
        ring().parse("(x+y)^2")
    assert e.value.pos == 5


def test_parse_unary_minus():
    R = ring()
    assert R.parse("-x") == -R.var("x")
    assert R.parse("-x+y") == R.var("y") - R.var("x")
    assert R.parse("(-x)*y") == -(R.var("x") * R.var("y"))
    assert R.parse("x-(-y)") == R.parse("x+y")


def test_parse_coefficients_reduce_mod_p():
    R = ring(p=3)
    assert R.parse("3*x") == R.zero()
    assert R.parse("4*x") == R.var("x")
    assert R.parse("x+x+x") == R.zero()


def test_parse_error_positions():
    R = ring()
    with pytest.raises(ParseError) as e:
        R.parse("x + w")
    assert e.value.pos == 4
    with pytest.raises(ParseError) as e:
        R.parse("x + ")
    assert e.value.pos == 4
    with pytest.raises(ParseError) as e:
        R.parse("x^y")
    assert e.value.pos == 2
    with pytest.raises(ParseError) as e:
        R.parse("(x+y")
    assert e.value.pos == 4
    with pytest.raises(ParseError) as e:
        R.parse("x ? y")
    assert e.value.pos == 2
    with pytest.raises(ParseError) as e:
        R.parse("x+y)")
    assert e.value.pos == 3


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        ring().parse("@")


# -- arithmetic ------------------------------------------------------------


def rand_poly(R, rng, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        m = tuple(rng.randint(0, max_exp) for _ in range(R.nvars))
        terms[m] = rng.randrange(R.field.p)
    return Polynomial(R, terms)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ring_axioms_randomized(p):
    R = ring(p=p, variables=("x", "y"))
    rng = random.Random(p * 11)
    for _ in range(80):
        f, g, h = (rand_poly(R, rng) for _ in range(3))
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) + h == f + (g + h)
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + R.zero() == f
        assert f * R.one() == f
        assert f - f == R.zero()
        assert (-f) + f == R.zero()


def test_pow_matches_repeated_multiplication():
    R = ring(p=3, variables=("x", "y"))
    f = R.parse("x+y")
    acc = R.one()
    for k in range(6):
        assert f ** k == acc
        acc = acc * f
    with pytest.raises(ValueError):
        f ** -1


def test_char_p_freshman_dream():
    # (x+y)^p = x^p + y^p over F_p
    for p in (2, 3, 5):
        R = ring(p=p, variables=("x", "y"))
        assert R.parse("x+y") ** p == R.parse(f"x^{p}+y^{p}")


def test_zero_coefficient_terms_never_stored():
    R = ring(p=2, variables=("x",))
    f = R.parse("x") + R.parse("x")
    assert f.terms == {}
    assert f.is_zero()
    assert f.total_degree() == -1


def test_substitute_is_a_ring_map():
    R = ring(p=5, variables=("x", "y"))
    S = ring(p=5, variables=("u", "v"))
    images = {"x": S.parse("u+v"), "y": S.parse("u*v")}
    rng = random.Random(42)
    for _ in range(30):
        f, g = rand_poly(R, rng), rand_poly(R, rng)
        assert (f + g).substitute(images) == f.substitute(images) + g.substitute(images)
        assert (f * g).substitute(images) == f.substitute(images) * g.substitute(images)


def test_substitute_missing_variable_raises():
    R = ring(p=5, variables=("x", "y"))
    S = ring(p=5, variables=("u",))
    with pytest.raises(KeyError):
        R.parse("x+y").substitute({"x": S.parse("u")})


# -- term orders -----------------------------------------------------------


def test_leading_terms_frozen():
    f_text = "x*y^2 + x^2*z + y*z^2 + z^3"
    assert ring().parse(f_text).leading() == ((1, 2, 0), 1)
    assert ring(order=LEX).parse(f_text).leading() == ((2, 0, 1), 1)


def test_degrevlex_grades_by_total_degree_first():
    R = ring()
    f = R.parse("x + y^2")
    assert f.leading()[0] == (0, 2, 0)


def test_order_with_priority_permutes_significance():
    # make z the most significant variable
    o = MonomialOrder("lex", priority=(2, 1, 0))
    R = ring(order=o)
    assert R.parse("x^5 + z").leading()[0] == (0, 0, 1)


def test_unknown_order_rejected():
    with pytest.raises(ValueError):
        MonomialOrder("grlex")


def test_zero_has_no_leading_term():
    with pytest.raises(ValueError):
        ring().zero().leading()


def test_monic_scales_leading_coefficient_to_one():
    R = ring(p=5)
    f = R.parse("3*x^2 + y")
    assert f.monic().leading()[1] == 1
    assert f.monic() == R.parse("x^2 + 2*y")


# -- rendering -------------------------------------------------------------


def test_render_frozen_examples():
    R = ring()
    assert R.zero().render() == "0"
    assert R.one().render() == "1"
    assert R.parse("x").render() == "x"
    assert R.parse("y+x").render() == "x + y"
    assert R.parse("2*x^2*y").render() == "2*x^2*y"
    assert R.parse("x - y").render() == "x + 4*y"  # negatives shown as residues


@pytest.mark.parametrize("p", [2, 3, 5])
def test_render_reparse_round_trip(p):
    R = PolyRing(PrimeField(p), ("x", "y", "z"))
    rng = random.Random(p * 13)
    for _ in range(60):
        f = rand_poly(R, rng)
        assert R.parse(f.render()) == f


def test_cross_ring_arithmetic_rejected():
    a = ring(p=2).parse("x")
    b = ring(p=3).parse("x")
    with pytest.raises(ValueError):
        a + b


def test_duplicate_variables_rejected():
    with pytest.raises(ValueError):
        PolyRing(PrimeField(2), ("x", "x"))
