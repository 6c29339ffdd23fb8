from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symbalg.fields import (
    QEPS,
    QQ,
    QSQRT3,
    FieldDescriptor,
    ParseError,
    format_element,
    parse_element,
    parse_rational,
    sqrt_field,
)

DESCRIPTORS = [QQ, QEPS, QSQRT3, sqrt_field(-1), sqrt_field(5)]

small_fractions = st.fractions(min_value=-30, max_value=30, max_denominator=12)


def elements(desc):
    if desc.degree == 1:
        return st.builds(lambda c0: desc.element(c0), small_fractions)
    return st.builds(lambda c0, c1: desc.element(c0, c1), small_fractions, small_fractions)


def test_add_componentwise():
    one_plus_theta = QEPS.element(1) + QEPS.gen()
    assert one_plus_theta == QEPS.element(1, 1)
    a = QEPS.element(Fraction(2, 3), Fraction(-1, 5))
    assert a + QEPS.zero() == a
    assert QEPS.element(1, 1) + QEPS.element(-1, -1) == QEPS.zero()


def test_mul_reduces_by_min_poly():
    eps = QEPS.gen()
    assert eps * eps == QEPS.element(-1, -1)
    r3 = QSQRT3.gen()
    assert r3 * r3 == QSQRT3.element(3)
    assert QEPS.element(1, 1) * QEPS.element(1, 1) == QEPS.element(0, 1)


def _solve_inverse_2x2(a):
    """Independent oracle: solve a * (x + y*t) = 1 as a rational 2x2 system."""
    u, w = a.desc.u, a.desc.w
    # columns are a*1 and a*t expressed on the basis {1, t}
    m00, m10 = a.c0, a.c1
    m01, m11 = -w * a.c1, a.c0 - u * a.c1
    det = m00 * m11 - m01 * m10
    return a.desc.element((m11 * 1 - m01 * 0) / det, (m00 * 0 - m10 * 1) / det)


def test_inv_examples():
    eps = QEPS.gen()
    assert eps.inv() == QEPS.element(-1, -1)
    assert QQ.element(2).inv() == QQ.element(Fraction(1, 2))
    one_minus_eps = QEPS.element(1, -1)
    expected = _solve_inverse_2x2(one_minus_eps)
    assert expected == QEPS.element(Fraction(2, 3), Fraction(1, 3))
    assert one_minus_eps.inv() == expected
    assert one_minus_eps * one_minus_eps.inv() == QEPS.one()


def test_inv_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QEPS.zero().inv()


def test_norm_formulas():
    a, b = Fraction(5, 2), Fraction(-3, 7)
    assert QSQRT3.element(a, b).norm() == a * a - 3 * b * b
    assert QEPS.element(a, b).norm() == a * a - a * b + b * b
    assert QEPS.zero().norm() == 0
    assert QQ.element(a).norm() == a


def test_descriptor_mismatch_is_an_error():
    with pytest.raises(ValueError):
        QEPS.one() + QSQRT3.one()
    with pytest.raises(ValueError):
        QEPS.one() * QQ.one()


def test_lift_is_the_explicit_embedding():
    assert QEPS.lift(Fraction(3, 4)) == QEPS.element(Fraction(3, 4), 0)
    assert QEPS.one() * 2 == QEPS.element(2)
    assert 2 - QEPS.gen() == QEPS.element(2, -1)


def test_reducible_min_poly_rejected():
    with pytest.raises(ValueError):
        FieldDescriptor(2, Fraction(0), Fraction(-4))  # t^2 = 4
    with pytest.raises(ValueError):
        sqrt_field(1)
    with pytest.raises(ValueError):
        sqrt_field(12)


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_field_axioms_random(desc):
    @settings(max_examples=60, deadline=None)
    @given(a=elements(desc), b=elements(desc), c=elements(desc))
    def inner(a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inv() == desc.one()

    inner()


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_norm_multiplicative(desc):
    @settings(max_examples=60, deadline=None)
    @given(a=elements(desc), b=elements(desc))
    def inner(a, b):
        assert (a * b).norm() == a.norm() * b.norm()

    inner()


@given(n=st.integers(-10**12, 10**12), d=st.integers(1, 10**9))
def test_rational_canonical_form_is_stable(n, d):
    q = Fraction(n, d)
    again = Fraction(q.numerator, q.denominator)
    assert again == q
    assert again.denominator > 0
    import math

    assert math.gcd(abs(again.numerator), again.denominator) == 1


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-7") == Fraction(-7)
    assert parse_rational(" 3 / 4 ") == Fraction(3, 4)
    for bad in ("1.5", "1e3", "3//4", "", "x"):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_parse_element_grammar():
    assert parse_element(QEPS, "3+1*w") == QEPS.element(3, 1)
    assert parse_element(QEPS, "-1/2-3/4*w") == QEPS.element(Fraction(-1, 2), Fraction(-3, 4))
    assert parse_element(QEPS, " 3 + 1 * w ") == QEPS.element(3, 1)
    assert parse_element(QQ, "5/3") == QQ.element(Fraction(5, 3))
    assert parse_element(QEPS, "w") == QEPS.gen()
    with pytest.raises(ParseError):
        parse_element(QQ, "1+1*w")
    with pytest.raises(ParseError):
        parse_element(QEPS, "1+*w")
    with pytest.raises(ParseError):
        parse_element(QEPS, "")


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_format_parse_round_trip(desc):
    @settings(max_examples=80, deadline=None)
    @given(a=elements(desc))
    def inner(a):
        assert parse_element(desc, format_element(a)) == a

    inner()
