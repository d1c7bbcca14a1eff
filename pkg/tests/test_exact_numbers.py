"""Arithmetic in Q(sqrt(3), sqrt(5)) must be exact, closed and total."""
import random
from fractions import Fraction

import pytest

from dgmodeq.exact import QF
from dgmodeq.exact.numbers import ONE, SQRT3, SQRT5, SQRT15, ZERO


def test_surd_product_table():
    assert SQRT3 * SQRT3 == QF.rational(3)
    assert SQRT5 * SQRT5 == QF.rational(5)
    assert SQRT3 * SQRT5 == SQRT15
    assert SQRT3 * SQRT15 == QF.rational(3) * SQRT5
    assert SQRT5 * SQRT15 == QF.rational(5) * SQRT3
    assert SQRT15 * SQRT15 == QF.rational(15)


def test_conjugate_products():
    assert (ONE + SQRT3) * (ONE - SQRT3) == QF.rational(-2)
    s = SQRT3 + SQRT5
    assert s * s == QF.rational(8) + QF.rational(2) * SQRT15


def test_reciprocal_single_component():
    assert SQRT3.reciprocal() == QF(0, Fraction(1, 3), 0, 0)
    assert SQRT5.reciprocal() == QF(0, 0, Fraction(1, 5), 0)
    assert SQRT15.reciprocal() == QF(0, 0, 0, Fraction(1, 15))
    half = QF.rational(1, 2)
    assert half.reciprocal() == QF.rational(2)
    for x in (SQRT3, SQRT5, SQRT15, QF.rational(-7, 3)):
        assert x * x.reciprocal() == ONE


def test_reciprocal_rejects_mixed_and_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.reciprocal()
    with pytest.raises(ValueError):
        (ONE + SQRT3).reciprocal()


def _random_qf(rng):
    return QF(
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
    )


def test_field_axioms_on_random_triples():
    # associativity, commutativity, distributivity over 1000 random triples
    rng = random.Random(20240517)
    for _ in range(1000):
        x, y, z = (_random_qf(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + ZERO == x
        assert x * ONE == x
        assert x - x == ZERO


def test_float_demotion_matches_components():
    import math

    x = QF(Fraction(1, 2), Fraction(1, 3), Fraction(-2, 7), Fraction(5, 11))
    expected = 0.5 + math.sqrt(3) / 3 - 2 * math.sqrt(5) / 7 + 5 * math.sqrt(15) / 11
    assert float(x) == pytest.approx(expected, rel=1e-15)


def test_rational_value_and_predicates():
    assert QF.rational(3, 4).rational_value() == Fraction(3, 4)
    assert QF.rational(0).is_zero()
    assert not SQRT3.is_rational()
    with pytest.raises(ValueError):
        SQRT3.rational_value()


def test_division_by_rational():
    assert SQRT3 / 2 == QF(0, Fraction(1, 2), 0, 0)
    assert (QF.rational(6) * SQRT5) / QF.rational(3) == QF.rational(2) * SQRT5
    assert 1 / SQRT5 == SQRT5.reciprocal()


def test_power():
    assert (ONE + SQRT3) ** 0 == ONE
    assert SQRT3**4 == QF.rational(9)
    x = QF.rational(1, 2) + SQRT15
    assert x**3 == x * x * x


def test_str_forms():
    assert str(QF.rational(1, 2)) == "1/2"
    assert str(SQRT3) == "sqrt(3)"
    assert str(QF.rational(-1, 6) * SQRT5) == "-1/6*sqrt(5)"
    assert str(ZERO) == "0"


def test_hash_consistent_with_eq():
    assert hash(QF.rational(2)) == hash(QF.rational(4, 2))
    d = {SQRT3: "a"}
    assert d[QF(0, 1, 0, 0)] == "a"


def test_immutability():
    with pytest.raises(AttributeError):
        SQRT3.b = Fraction(2)


def test_coerce_accepts_int_fraction_qf():
    assert QF.coerce(2) == QF.rational(2)
    assert QF.coerce(Fraction(1, 3)) == QF.rational(1, 3)
    assert QF.coerce(SQRT5) is SQRT5
    with pytest.raises(TypeError):
        QF.coerce(0.5)
