"""Scalar layer: parsing, normalization, exact field arithmetic."""

import random
from fractions import Fraction

import pytest

from liecas.scalars import MPoly, RatFunc, ScalarError, scalar, var
from liecas.parsing import ParseError, parse_scalar


def test_parse_rational_normalizes():
    assert parse_scalar("2/4") == Fraction(1, 2)


def test_parse_polynomial_terms():
    p = parse_scalar("p^2 - 1", ["p"])
    assert p.is_poly()
    assert p.as_mpoly().terms == {(2,): Fraction(1), (0,): Fraction(-1)}


def test_parse_ratfunc_denominator_normalized():
    r = parse_scalar("(1-p)/(1+p)", ["p"])
    assert not r.is_poly()
    # denominator 1+p with positive leading coefficient
    assert r.den == parse_scalar("1+p", ["p"]).as_mpoly()
    assert r.num == parse_scalar("1-p", ["p"]).as_mpoly()


def test_parse_negative_denominator_sign_flips():
    r = parse_scalar("1/(-p + 2)", ["p"])
    assert r.den.leading()[1] > 0
    assert r == parse_scalar("(-1)/(p - 2)", ["p"])


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse_scalar("2 +", [])
    with pytest.raises(ParseError):
        parse_scalar("q + 1", ["p"])
    with pytest.raises(ParseError):
        parse_scalar("(1", [])
    with pytest.raises(ScalarError):
        parse_scalar("1/(p - p)", ["p"])


def test_reserved_charpoly_variable_rejected():
    with pytest.raises(ScalarError):
        parse_scalar("X_charpoly + 1", ["X_charpoly"])


def test_a_over_a_is_one():
    p = var("p")
    one = RatFunc(p + 1, p + 1)
    assert one == 1
    assert one.is_poly()


def test_exact_division_reduction():
    p = var("p")
    r = RatFunc(p ** 2 - 1, p + 1)
    assert r.is_poly()
    assert r.as_mpoly() == (p - 1)
    # and the reciprocal direction a/(a*b) = 1/b
    r2 = RatFunc(p + 1, p ** 2 - 1)
    assert r2 == 1 / (p - 1)


def test_monomial_factor_is_stripped():
    p = var("p")
    r = RatFunc(p ** 3, p)
    assert r.is_poly() and r.as_mpoly() == p ** 2


def _random_scalar(rng, vars=("p", "q")):
    if rng.random() < 0.4:
        return scalar(Fraction(rng.randint(-6, 6), rng.randint(1, 4)), vars)
    p = MPoly.const(0, vars)
    for _ in range(rng.randint(1, 3)):
        exp = tuple(rng.randint(0, 2) for _ in vars)
        p = p + MPoly(tuple(sorted(vars)), {exp: Fraction(rng.randint(-5, 5))})
    num = p
    if rng.random() < 0.5:
        den = MPoly(tuple(sorted(vars)), {(1, 0): Fraction(1), (0, 0): Fraction(rng.randint(1, 3))})
        return RatFunc(num, den)
    return RatFunc.of(num)


def test_field_axioms_on_random_triples():
    rng = random.Random(20240)
    for _ in range(120):
        a, b, c = (_random_scalar(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == 1


def test_printer_roundtrip_on_random_values():
    rng = random.Random(7)
    for _ in range(150):
        x = _random_scalar(rng)
        again = parse_scalar(str(x), ["p", "q"])
        assert again == x


def test_subs_and_eval():
    p, q = var("p"), var("q")
    r = RatFunc((p * q + 1), (p + 1))
    assert r.subs({"p": Fraction(1)}) == (q + 1) / 2
    assert r.eval_rational({"p": Fraction(2), "q": Fraction(3)}) == Fraction(7, 3)
    with pytest.raises(ScalarError):
        r.subs({"p": Fraction(-1)})


def test_mpoly_equality_across_contexts():
    p1 = var("p")
    p2 = MPoly.variable("p").extend(("p", "q"))
    assert p1 == p2
    assert hash(p1) == hash(p2)


def test_coeff_of_and_derivative():
    p, q = var("p"), var("q")
    f = p ** 2 * q + 3 * q - 2
    assert f.coeff_of("p", 2) == q
    assert f.coeff_of("p", 0) == 3 * q - 2
    assert f.derivative("p") == 2 * p * q
