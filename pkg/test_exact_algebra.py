#!/usr/bin/env python3
"""
Test exact integer, q-polynomial, determinant and power-series arithmetic
"""

import random
from fractions import Fraction

import pytest
import sympy

from multicores.errors import DomainError, FormulaViolation, NonExactDivisionError
from multicores.exact_algebra import (
    PowerSeries,
    QPolynomial,
    binomial,
    catalan,
    det_bareiss,
    det_cofactor,
    det_exact,
    det_qpoly,
    hessenberg_catalan_det,
    motzkin,
    q_binomial,
    q_binomial_pascal,
    series_add,
    series_divide,
    series_divide_monomial,
    series_geometric,
    series_inverse,
    series_multiply,
    series_sqrt,
    series_subtract,
)

q = sympy.symbols("q")


def sympy_coeffs(expr) -> tuple[int, ...]:
    poly = sympy.Poly(sympy.expand(expr), q)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def to_sympy(p: QPolynomial):
    return sum(c * q**i for i, c in enumerate(p.coeffs))


def test_binomial_domain():
    """binomial is zero outside 0 <= k <= n and rejects negative n"""
    assert binomial(5, 2) == 10
    assert binomial(3, 5) == 0
    assert binomial(4, -1) == 0
    with pytest.raises(DomainError):
        binomial(-1, 2)


def test_catalan_and_motzkin():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [motzkin(n) for n in range(9)] == [1, 1, 2, 4, 9, 21, 51, 127, 323]


def test_q_binomial_small():
    assert q_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert q_binomial(3, 0) == QPolynomial.one()
    assert q_binomial(3, 4) == QPolynomial.zero()


def test_q_binomial_against_sympy():
    """Product form matches sympy's cancellation of the same quotient"""
    for n in range(9):
        for k in range(n + 1):
            num = sympy.prod([1 - q ** (n - i) for i in range(k)])
            den = sympy.prod([1 - q ** (i + 1) for i in range(k)])
            assert q_binomial(n, k).coeffs == sympy_coeffs(sympy.cancel(num / den))


def test_q_binomial_pascal_agrees():
    for n in range(12):
        for k in range(-1, n + 2):
            assert q_binomial(n, k) == q_binomial_pascal(n, k)


def test_q_binomial_at_one_and_palindromic():
    for n in range(31):
        for k in range(n + 1):
            poly = q_binomial(n, k)
            assert poly.at_one() == binomial(n, k)
            assert poly.is_palindromic()
            assert poly.degree == k * (n - k)


def test_qpolynomial_arithmetic():
    one_q = QPolynomial((1, 1))
    assert (one_q ** 3).coeffs == (1, 3, 3, 1)
    assert (one_q ** 3).exact_div(one_q) == one_q * one_q
    assert (one_q - one_q) == QPolynomial.zero()
    assert (2 - one_q).coeffs == (1, -1)
    assert one_q(2) == 3
    assert str(QPolynomial((1, 1, 2))) == "1 + q + 2q^2"
    assert str(QPolynomial((0, -1))) == "-q"
    assert QPolynomial.from_counts([0, 1, 2, 2, 3]).coeffs == (1, 1, 2, 1)


def test_exact_div_remainder_raises():
    with pytest.raises(NonExactDivisionError):
        QPolynomial((1, 0, 1)).exact_div(QPolynomial((1, 1)))
    with pytest.raises(NonExactDivisionError):
        QPolynomial((1,)).exact_div(QPolynomial.zero())


def test_integer_determinants_against_sympy():
    rng = random.Random(20240917)
    for _ in range(40):
        n = rng.randint(0, 8)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        expected = int(sympy.Matrix(m).det()) if n else 1
        assert det_bareiss(m) == expected
        assert det_exact(m) == expected
        if n <= 6:
            assert det_cofactor(m) == expected


def test_bareiss_pivot_swaps():
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1
    assert det_bareiss([[0, 1], [0, 2]]) == 0


def test_non_square_rejected():
    with pytest.raises(DomainError):
        det_exact([[1, 2]])


def test_qpoly_determinant_paths_agree():
    """Cofactor and Bareiss determinants of q-matrices match sympy"""
    rng = random.Random(5)
    for n in (2, 3, 7):
        m = [[QPolynomial(tuple(rng.randint(-2, 2) for _ in range(3))) for _ in range(n)] for _ in range(n)]
        one = QPolynomial.one()
        bareiss = det_bareiss(m, one=one, exact_div=lambda a, b: a.exact_div(b))
        assert det_qpoly(m) == bareiss
        if n <= 3:
            expected = sympy.Matrix([[to_sympy(e) for e in row] for row in m]).det()
            assert det_qpoly(m) == QPolynomial(sympy_coeffs(expected))


def test_hessenberg_catalan_det():
    for n in range(1, 13):
        assert hessenberg_catalan_det(n) == catalan(n)


def test_series_inverse_and_geometric():
    one_minus_x = PowerSeries((1, -1), 6)
    assert series_inverse(one_minus_x).to_integers() == [1] * 6
    assert series_geometric(3, 7).to_integers() == [1, 0, 0, 1, 0, 0, 1]
    with pytest.raises(DomainError):
        series_divide(PowerSeries.constant(1, 4), PowerSeries.x_power(1, 4))


def test_series_sqrt_gives_catalan():
    """(1 - sqrt(1 - 4x)) / 2x is the Catalan generating function"""
    order = 12
    root = series_sqrt(PowerSeries((1, -4), order))
    catalans = series_divide_monomial(1 - root, 1) / 2
    assert catalans.to_integers() == [catalan(n) for n in range(order - 1)]


def test_series_sqrt_matches_sympy():
    x = sympy.symbols("x")
    f = PowerSeries((1, 3, -2, 5), 8)
    expected = sympy.series(sympy.sqrt(1 + 3 * x - 2 * x**2 + 5 * x**3), x, 0, 8).removeO()
    got = series_sqrt(f)
    for i in range(8):
        assert got[i] == Fraction(str(expected.coeff(x, i)))


def test_series_sqrt_squares_back():
    rng = random.Random(5)
    order = 12
    for _ in range(50):
        f = PowerSeries((1,) + tuple(rng.randint(-9, 9) for _ in range(order - 1)), order)
        root = series_sqrt(f)
        assert root[0] == 1
        assert series_multiply(root, root) == f


def test_series_arith():
    rng = random.Random(17)
    f = PowerSeries(tuple(rng.randint(-5, 5) for _ in range(10)), 10)
    assert series_subtract(f, f) == PowerSeries((), 10)
    assert series_add(f, series_subtract(PowerSeries.constant(1, 10), f)) == PowerSeries.constant(1, 10)
    geometric = series_geometric(1, 10)
    assert series_multiply(PowerSeries((1, -1), 10), geometric) == PowerSeries.constant(1, 10)
    assert series_divide(PowerSeries.constant(1, 10), PowerSeries((1, -1), 10)) == geometric
    quotient = series_divide_monomial(PowerSeries((0, 0, 0, 2, 2), 8), 3) / 2
    assert quotient.coeffs[:2] == (1, 1) and not any(quotient.coeffs[2:])


def test_series_errors():
    with pytest.raises(DomainError):
        series_sqrt(PowerSeries((4, 1), 3))
    with pytest.raises(NonExactDivisionError):
        series_divide_monomial(PowerSeries((1, 1), 4), 1)
    with pytest.raises(IndexError):
        PowerSeries((1,), 3)[3]
    with pytest.raises(FormulaViolation):
        PowerSeries((Fraction(1, 2),), 2).to_integers()
