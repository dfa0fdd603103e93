"""Rational series arithmetic: expansion, equality, h*, quasipolynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alcoved.errors import SeriesError
from alcoved.series import (
    RationalSeries,
    denominator_str,
    equals,
    eval_quasipolynomial,
    expand,
    h_star,
    poly_str,
    poly_trim,
    quasipolynomial,
)

SQUARE = RationalSeries(numerator=(1, 1, 1), denom_exponents=(1, 1, 2))
WEDGE = RationalSeries(numerator=(1, 1, 3, 1), denom_exponents=(1, 1, 2, 2))


def test_poly_trim():
    assert poly_trim((1, 0, 1, 0, 0)) == (1, 0, 1)
    assert poly_trim((0, 0)) == (0,)
    assert poly_trim(()) == (0,)


def test_poly_str():
    assert poly_str((1, 1, 3, 1)) == "1 + z + 3z^2 + z^3"
    assert poly_str((1, 0, 1, 1)) == "1 + z^2 + z^3"
    assert poly_str((0, -2, 1)) == "-2z + z^2"
    assert poly_str((0,)) == "0"
    assert poly_str((5,), var="t") == "5"


def test_denominator_str():
    assert denominator_str((1, 1, 2, 2)) == "(1 - z)^2 (1 - z^2)^2"
    assert denominator_str((2, 1, 1)) == "(1 - z)^2 (1 - z^2)"
    assert denominator_str((3,)) == "(1 - z^3)"


def test_str_roundtrip_format():
    assert str(SQUARE) == "(1 + z + z^2) / (1 - z)^2 (1 - z^2)"
    one = RationalSeries(numerator=(1,), denom_exponents=(1,))
    assert str(one) == "1 / (1 - z)"


def test_expand_square():
    assert expand(SQUARE, 4) == [1, 3, 7, 12, 19]


def test_expand_geometric():
    s = RationalSeries(numerator=(1,), denom_exponents=(1,))
    assert expand(s, 6) == [1] * 7


def test_expand_cubes():
    # Ehrhart series of the 3-cube
    s = RationalSeries(numerator=(1, 4, 1), denom_exponents=(1, 1, 1, 1))
    assert expand(s, 3) == [1, 8, 27, 64]


def test_expand_mixed_denominator():
    s = RationalSeries(numerator=(1,), denom_exponents=(1, 2))
    assert expand(s, 4) == [1, 1, 2, 2, 3]


def test_expand_negative_bound():
    with pytest.raises(SeriesError):
        expand(SQUARE, -1)


def test_equals_cancellation():
    # (1 + z) / (1 - z)^2 == (1 + z)(1 - z) / (1 - z)^2 (1 - z^2)
    s1 = RationalSeries(numerator=(1, 1), denom_exponents=(1, 1))
    s2 = RationalSeries(numerator=(1, 1, -1, -1), denom_exponents=(1, 1, 2))
    assert equals(s1, s2)


def test_equals_denominator_order():
    s1 = RationalSeries(numerator=(1, 1, 1), denom_exponents=(2, 1, 1))
    assert equals(SQUARE, s1)


def test_equals_distinguishes():
    assert not equals(SQUARE, WEDGE)


def test_h_star_defined():
    s = RationalSeries(numerator=(1, 4, 1), denom_exponents=(1, 1, 1, 1))
    assert h_star(s) == (1, 4, 1)


def test_h_star_undefined():
    with pytest.raises(SeriesError, match="h\\* undefined"):
        h_star(SQUARE)


def test_quasipolynomial_constant_period():
    s = RationalSeries(numerator=(1,), denom_exponents=(1,))
    assert quasipolynomial(s) == [(Fraction(1),)]


def test_quasipolynomial_square():
    res = quasipolynomial(SQUARE)
    assert len(res) == 2
    assert res[0] == (Fraction(1), Fraction(3, 2), Fraction(3, 4))
    assert res[1] == (Fraction(3, 4), Fraction(3, 2), Fraction(3, 4))
    # leading coefficient is the Euclidean area, shared by both residues
    assert res[0][-1] == res[1][-1] == Fraction(3, 4)


def test_quasipolynomial_matches_expansion():
    for s in [SQUARE, WEDGE, RationalSeries(numerator=(1,), denom_exponents=(1, 2))]:
        res = quasipolynomial(s)
        vals = expand(s, 12)
        for t in range(13):
            assert eval_quasipolynomial(res, t) == vals[t]


@settings(max_examples=60, deadline=None)
@given(
    num=st.lists(st.integers(min_value=-3, max_value=5), min_size=1, max_size=4),
    den=st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=4),
)
def test_equals_iff_expansions_agree(num, den):
    s1 = RationalSeries(numerator=tuple(num), denom_exponents=tuple(den))
    s2 = RationalSeries(numerator=(1, 1, 1), denom_exponents=(1, 1, 2))
    # degree bound: numerator degrees stay below 4 + sum of exponents
    T = 4 + sum(den) + sum(s2.denom_exponents)
    assert equals(s1, s2) == (expand(s1, T) == expand(s2, T))
