import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from monodromy.errors import DivisionByZero
from monodromy.fields import QQ, Field, cyclotomic_polynomial, format_scalar, parse_scalar

rationals = st.fractions(max_denominator=50).map(lambda f: mpq(f.numerator, f.denominator))


def test_cyclotomic_polynomials():
    # x^2 + x + 1 and x^2 + 1, coefficients from the constant term up
    assert [int(c) for c in cyclotomic_polynomial(3)] == [1, 1, 1]
    assert [int(c) for c in cyclotomic_polynomial(4)] == [1, 0, 1]


def test_roots_of_unity():
    F = Field.cyclotomic(3)
    w = F.root_of_unity(1)
    assert w ** 3 == F.one
    assert w != F.one
    assert F.one + w + w ** 2 == F.zero


@given(st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=2, max_size=2))
def test_cyclotomic_field_axioms(a, b):
    F = Field.cyclotomic(3)
    w = F.gen
    x, y = F(a[0]) + F(a[1]) * w, F(b[0]) + F(b[1]) * w
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    if y:
        assert (x / y) * y == x


def test_division_by_zero():
    F = Field.cyclotomic(5)
    w = F.gen
    with pytest.raises(DivisionByZero):
        w / (w - w)
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero
    with pytest.raises(DivisionByZero):
        parse_scalar("1/0")


@given(rationals)
def test_rational_round_trip(q):
    assert parse_scalar(format_scalar(q)) == q


def test_cyclotomic_round_trip():
    F = Field.cyclotomic(3)
    x = F(mpq(1, 2)) - F(mpq(3, 7)) * F.gen
    assert parse_scalar(format_scalar(x), F) == x


def test_rationals_field():
    assert QQ.is_rational
    assert QQ(mpq(1, 3)) * 3 == 1
