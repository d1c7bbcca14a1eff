"""Cell-local polynomial basis: moments, traces, exact update matrices.

The matrix literals asserted here were derived by hand from the weak form
and double-checked with an independent computer-algebra run before being
frozen; the assembly code must reproduce them entry for entry.
"""
from fractions import Fraction

import pytest

from dgmodeq.exact import QF, update_matrices_exact
from dgmodeq.exact.basis import (
    basis_polynomials,
    mass_diagonal,
    poly_derivative,
    poly_eval,
    poly_moment,
    trace_vector,
    volume_matrix,
    xi_moment,
)

R = QF.rational


def test_xi_moments():
    assert xi_moment(0) == Fraction(1)
    assert xi_moment(1) == Fraction(0)
    assert xi_moment(2) == Fraction(1, 12)
    assert xi_moment(3) == Fraction(0)
    assert xi_moment(4) == Fraction(1, 80)
    assert xi_moment(6) == Fraction(1, 448)


def test_mass_diagonals():
    assert mass_diagonal(0) == (R(1),)
    assert mass_diagonal(1) == (R(1), R(1, 12))
    assert mass_diagonal(2) == (R(1), R(1), R(1))


def test_orthogonality():
    for degree in (1, 2):
        polys = basis_polynomials(degree)
        for m, pm in enumerate(polys):
            for n, pn in enumerate(polys):
                prod = [R(0)] * (len(pm) + len(pn) - 1)
                for i, ci in enumerate(pm):
                    for j, cj in enumerate(pn):
                        prod[i + j] = prod[i + j] + ci * cj
                integral = sum(
                    (c * QF.coerce(xi_moment(p)) for p, c in enumerate(prod)), R(0)
                )
                if m == n:
                    assert integral == mass_diagonal(degree)[m]
                else:
                    assert integral == R(0)


def test_traces():
    assert trace_vector(1, +1) == (R(1), R(1, 2))
    assert trace_vector(1, -1) == (R(1), R(-1, 2))
    sq3 = QF(0, 1, 0, 0)
    sq5 = QF(0, 0, 1, 0)
    assert trace_vector(2, +1) == (R(1), sq3, sq5)
    assert trace_vector(2, -1) == (R(1), -sq3, sq5)


def test_second_mode_center_value():
    phi2 = basis_polynomials(2)[2]
    assert poly_eval(phi2, Fraction(0)) == QF(0, 0, Fraction(-1, 2), 0)


def test_poly_derivative_and_moment():
    phi1 = basis_polynomials(2)[1]  # 2*sqrt(3)*xi
    d = poly_derivative(phi1)
    assert poly_eval(d, Fraction(1, 3)) == QF(0, 2, 0, 0)
    assert poly_moment(phi1, 1) == QF(0, Fraction(1, 6), 0, 0)


def test_volume_matrix_k1():
    v = volume_matrix(1)
    assert v == ((R(0), R(0)), (R(1), R(0)))


def test_update_matrices_k1_golden():
    a, b = update_matrices_exact(1)
    assert a == ((R(1), R(1, 2)), (R(-6), R(3)))
    assert b == ((R(1), R(1, 2)), (R(-6), R(-3)))


def test_update_matrices_k2_golden():
    sq3 = QF(0, 1, 0, 0)
    sq5 = QF(0, 0, 1, 0)
    sq15 = QF(0, 0, 0, 1)
    a, b = update_matrices_exact(2)
    assert a == (
        (R(1), sq3, sq5),
        (-sq3, R(3), sq15),
        (sq5, -sq15, R(5)),
    )
    assert b == (
        (R(1), sq3, sq5),
        (-sq3, R(-3), -sq15),
        (sq5, sq15, R(5)),
    )


def test_update_matrices_k0():
    a, b = update_matrices_exact(0)
    assert a == ((R(1),),)
    assert b == ((R(1),),)


def test_conservation_rows_match():
    # row 0 of A equals row 0 of B: the cell average only feels the
    # difference of interface fluxes, so a0 telescopes over the ring
    for degree in (0, 1, 2):
        a, b = update_matrices_exact(degree)
        assert a[0] == b[0]


def test_difference_matrix_k2():
    # A - B drives the theta=0 symbol; its lower block is the rotation-like
    # part that produces the complex pair -3 +- i*sqrt(51)
    sq15 = QF(0, 0, 0, 1)
    a, b = update_matrices_exact(2)
    diff = tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )
    assert diff == (
        (R(0), R(0), R(0)),
        (R(0), R(6), R(2) * sq15),
        (R(0), R(-2) * sq15, R(0)),
    )


def test_degree_out_of_range():
    with pytest.raises(ValueError):
        update_matrices_exact(3)
    with pytest.raises(ValueError):
        mass_diagonal(-1)
