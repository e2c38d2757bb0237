from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from foliadex.errors import DomainError, ParseError
from foliadex.lattice import (
    Class2,
    Cone2,
    Membership,
    cone2_membership,
    content,
    parse_rational,
    render_rational,
)


def test_parse_rational_values():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-4/6") == Fraction(-2, 3)
    assert parse_rational("5") == Fraction(5)
    assert parse_rational("+7/3") == Fraction(7, 3)
    assert parse_rational("  2/4 ") == Fraction(1, 2)


@pytest.mark.parametrize("text", ["0.5", "1e3", "", "x", "1 / 2", "/3", "3/", "1/0"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_render_lowest_terms():
    assert render_rational(Fraction(4, 6)) == "2/3"
    assert render_rational(Fraction(-3, 2)) == "-3/2"
    assert render_rational(Fraction(5)) == "5"


PSEFF_LIKE = Cone2(Class2(1, -2), Class2(0, 1))


def test_cone_membership_cases():
    assert cone2_membership(PSEFF_LIKE, Class2(1, -2)) is Membership.BOUNDARY
    assert cone2_membership(PSEFF_LIKE, Class2(1, 0)) is Membership.INTERIOR
    assert cone2_membership(PSEFF_LIKE, Class2(1, -3)) is Membership.OUTSIDE


def test_cone_rejects_bad_rays():
    with pytest.raises(DomainError):
        Cone2(Class2(2, -4), Class2(0, 1))  # not primitive
    with pytest.raises(DomainError):
        Cone2(Class2(1, 2), Class2(2, 4))  # proportional
    with pytest.raises(DomainError):
        Cone2(Class2(Fraction(1, 2), 1), Class2(0, 1))  # not integral


def test_content_values():
    assert content(Class2(4, 5)) == 1
    assert content(Class2(2, 4)) == 2
    assert content(Class2(0, 7)) == 7


def test_content_domain_errors():
    with pytest.raises(DomainError):
        content(Class2(Fraction(1, 2), 1))
    with pytest.raises(DomainError):
        content(Class2(0, 0))


rationals = st.fractions(max_denominator=10**6)


@given(rationals)
def test_parse_render_round_trip(x):
    assert parse_rational(render_rational(x)) == x


@given(
    rationals.filter(lambda a: a > 0),
    rationals.filter(lambda b: b > 0),
)
def test_positive_ray_combinations_are_interior(a, b):
    v = Class2(a, -2 * a) + Class2(0, b)
    assert cone2_membership(PSEFF_LIKE, v) is Membership.INTERIOR


@given(st.integers(1, 1000), st.integers(-50, 50), st.integers(-50, 50))
def test_content_scales(k, x, y):
    if x == 0 and y == 0:
        return
    v = Class2(x, y)
    assert content(v * k) == k * content(v)


@given(rationals, rationals, rationals, rationals, rationals, rationals)
def test_class2_arithmetic_exact(a, b, c, d, e, f):
    # associativity/commutativity only hold exactly; floats would drift
    u, v, w = Class2(a, b), Class2(c, d), Class2(e, f)
    assert (u + v) + w == u + (v + w)
    assert u + v == v + u
    assert (u + v) * 3 == u * 3 + v * 3
    assert (u + v) - v == u
