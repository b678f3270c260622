from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gelfand_hille.scalars import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    abs1,
    binomial,
    falling_binomial,
    format_rational,
    parse_rational,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
gaussians = st.builds(GaussianRational, rationals, rationals)


@pytest.mark.parametrize("k, j, expected", [(5, 2, 10), (3, 5, 0), (7, 3, 35), (0, 0, 1), (10, 0, 1)])
def test_binomial_examples(k, j, expected):
    assert binomial(k, j) == expected


@pytest.mark.parametrize("k, j", [(-1, 2), (3, -1)])
def test_binomial_rejects_negative(k, j):
    with pytest.raises(ValueError):
        binomial(k, j)


def test_binomial_pascal():
    for k in range(1, 61):
        for j in range(1, k + 1):
            assert binomial(k, j) == binomial(k - 1, j - 1) + binomial(k - 1, j)


def test_falling_binomial_is_polynomial_extension():
    # C(n, j) as a polynomial in n; negative n gives (-1)^j C(j-n-1, j)
    for n in range(-6, 0):
        for j in range(5):
            assert falling_binomial(n, j) == (-1) ** j * binomial(j - n - 1, j)


def test_binomial_large_exact():
    assert binomial(208, 8) == 208 * 207 * 206 * 205 * 204 * 203 * 202 * 201 // 40320


@pytest.mark.parametrize(
    "z, expected",
    [
        (GaussianRational(Fraction(3, 2)), Fraction(3, 2)),
        (ZERO, 0),
        (GaussianRational(-1, 2), 3),
    ],
)
def test_abs1_examples(z, expected):
    assert abs1(z) == expected


@given(gaussians, gaussians)
def test_abs1_bounds(z, w):
    assert abs1(z * w) <= 2 * abs1(z) * abs1(w)
    assert abs1(z + w) <= abs1(z) + abs1(w)
    assert (abs1(z) == 0) == (not z)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    if a:
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


@given(gaussians)
def test_norm_squared(z):
    prod = z * z.conjugate()
    assert prod.is_real()
    assert prod.re == z.re**2 + z.im**2 == z.norm_squared()


def test_i_squared():
    assert I * I == GaussianRational(-1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_canonical_form():
    a = GaussianRational(Fraction(6, -4), Fraction(-3, -9))
    b = GaussianRational(Fraction(-3, 2), Fraction(1, 3))
    assert a == b and hash(a) == hash(b)
    assert a.re.denominator > 0
    assert Fraction(-6, -4) == Fraction(6, 4)
    assert repr(a) == repr(b)


def test_int_and_fraction_parts_interchangeable():
    assert GaussianRational(Fraction(4, 2)) == GaussianRational(2)
    assert GaussianRational(2) == 2
    assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(GaussianRational(Fraction(4, 2))) == hash(2)


def test_text_encoding_round_trip():
    z = GaussianRational(Fraction(-7, 3), 5)
    assert z.to_json() == {"re": "-7/3", "im": "5"}
    assert GaussianRational.from_json(z.to_json()) == z
    assert GaussianRational.from_json("3/4") == GaussianRational(Fraction(3, 4))
    assert GaussianRational.from_json(2) == GaussianRational(2)
    assert format_rational(Fraction(4, 2)) == "2"


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", True, 1.5])
def test_parse_rational_rejects_inexact(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_str():
    assert str(GaussianRational(1, -2)) == "1-2i"
    assert str(GaussianRational(0, Fraction(1, 2))) == "1/2i"
    assert str(GaussianRational(Fraction(-1, 2))) == "-1/2"
