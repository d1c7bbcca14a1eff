"""Truncated derivative series: shifts, products, h bookkeeping."""
from fractions import Fraction

import pytest

from dgmodeq.exact import QF, DerivativeSeries


def q(num, den=1):
    return QF.rational(num, den)


def test_unit_series_represents_point_value():
    u = DerivativeSeries.unit(6)
    assert u.coefficient(0) == q(1)
    assert all(u.coefficient(p) == q(0) for p in range(1, 7))
    assert u.h_shift == 0


def test_shift_is_taylor_expansion():
    # u(x+h) = sum_p u^(p)(x) h^p / p!
    u = DerivativeSeries.unit(8).shift(1)
    fact = 1
    for p in range(9):
        if p:
            fact *= p
        assert u.coefficient(p) == q(1, fact)


def test_negative_shift_alternates_signs():
    u = DerivativeSeries.unit(6).shift(-1)
    fact = 1
    for p in range(7):
        if p:
            fact *= p
        assert u.coefficient(p) == q((-1) ** p, fact)


def test_half_shift():
    u = DerivativeSeries.unit(4).shift(Fraction(1, 2))
    assert u.coefficient(1) == q(1, 2)
    assert u.coefficient(2) == q(1, 8)
    assert u.coefficient(3) == q(1, 48)


def test_shift_composition_round_trip():
    base = DerivativeSeries.from_terms({1: q(1), 3: q(1, 40)}, order=8)
    moved = base.shift(Fraction(1, 2)).shift(-Fraction(1, 2))
    assert moved == base


def test_shift_whole_equals_two_halves():
    base = DerivativeSeries.from_terms({0: q(2), 2: q(-1, 3)}, order=7)
    assert base.shift(1) == base.shift(Fraction(1, 2)).shift(Fraction(1, 2))


def test_shift_offset_restricted():
    u = DerivativeSeries.unit(4)
    with pytest.raises(ValueError):
        u.shift(Fraction(1, 3))
    with pytest.raises(ValueError):
        u.shift(2)


def test_linear_data_shift():
    # series for u and h*u' evaluated one cell left: the u'' entry of the
    # combination a1-at-j-minus-1 picks up the -1 expected from re-expansion
    a1 = DerivativeSeries.from_terms({1: q(1)}, order=5)
    left = a1.shift(-1)
    assert left.coefficient(1) == q(1)
    assert left.coefficient(2) == q(-1)
    assert left.coefficient(3) == q(1, 2)


def test_addition_requires_matching_h_shift():
    a = DerivativeSeries.unit(4)
    b = DerivativeSeries.unit(4).div_h()
    with pytest.raises(ValueError):
        a + b


def test_div_h_only_moves_bookkeeping():
    a = DerivativeSeries.from_terms({2: q(3)}, order=4)
    b = a.div_h()
    assert b.h_shift == -1
    assert b.coefficient(2) == q(3)
    assert b.h_power(2) == 1
    assert a.h_power(2) == 2


def test_differentiated_prepends_zero():
    a = DerivativeSeries.from_terms({0: q(1), 2: q(1, 24)}, order=4)
    d = a.differentiated()
    assert d.coefficient(1) == q(1)
    assert d.coefficient(3) == q(1, 24)
    assert d.coefficient(0) == q(0)
    # d/dx of c_p u^(p) h^p contributes at u^(p+1) with the same h power
    assert d.h_shift == -1
    assert d.h_power(1) == 0


def test_truncation_is_strict():
    a = DerivativeSeries.unit(3)
    with pytest.raises(IndexError):
        a.coefficient(4)
    assert a.truncated(2).order == 2


def test_addition_truncates_to_shorter():
    a = DerivativeSeries.unit(6)
    b = DerivativeSeries.unit(3)
    assert (a + b).order == 3


def test_scaling():
    a = DerivativeSeries.from_terms({1: q(2), 2: q(4)}, order=3)
    s = a.scaled(q(1, 2))
    assert s.coefficient(1) == q(1)
    assert s.coefficient(2) == q(2)
    assert (a * q(0)).leading() is None


def test_leading_term():
    a = DerivativeSeries.from_terms({3: q(-2, 5)}, order=6).div_h()
    p, c = a.leading()
    assert p == 3 and c == q(-2, 5)
    assert a.h_power(p) == 2
