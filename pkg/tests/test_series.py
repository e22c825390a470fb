from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partgenus.poly import KappaPolynomial
from partgenus.series import (SeriesError, TruncatedSeries, compose, derivative,
                              inverse_relation_holds, pow_rational, reciprocal,
                              solve_fixed_point)

N = 10
S = TruncatedSeries
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series(const=None, order=N):
    c0 = rationals if const is None else st.just(const)
    return st.tuples(c0, st.lists(rationals, min_size=order, max_size=order)).map(
        lambda t: S([t[0]] + t[1], order))


def catalan(k):
    return comb(2 * k, k) // (k + 1)


def test_basic_products():
    x = S.x(N)
    assert (1 + x) * (1 - x) == S([1, 0, -1], N)
    geom = S([1] * (N + 1), N)
    assert geom * (1 - x) == S.one(N)
    a = S([1, 2, 3], N)
    assert a + 0 == a


def test_index_beyond_order():
    with pytest.raises(IndexError):
        S.one(3)[4]


def test_mixed_orders_truncate():
    assert (S.one(5) + S.one(3)).order == 3


@given(series(), series(), series())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - a) == S.zero(N)


@given(series(const=Fraction(1)))
@settings(max_examples=60, deadline=None)
def test_reciprocal_and_roots(f):
    assert f * reciprocal(f) == S.one(N)
    half = pow_rational(f, Fraction(1, 2))
    assert half * half == f
    assert pow_rational(f, Fraction(-1, 3)) ** 3 * f == S.one(N)
    assert pow_rational(f, 0) == S.one(N)
    assert pow_rational(f, 3) == f ** 3


@given(series(const=0), series(const=0), series())
@settings(max_examples=40, deadline=None)
def test_compose_associative(g, h, f):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_compose_examples():
    x = S.x(N)
    f = S([3, 1, 4, 1, 5], N)
    assert compose(f, x) == f
    assert compose(x * x, x + x * x) == S([0, 0, 1, 2, 1], N)
    with pytest.raises(SeriesError):
        compose(f, 1 + x)


def test_derivative():
    assert derivative(S.monomial(3, N)) == S.monomial(2, N - 1, 3)
    assert derivative(S([7], N)) == S.zero(N - 1)
    k = [None] + [KappaPolynomial.kappa(i) for i in range(1, N + 1)]
    W = S([0] + k[1:], N)
    X2 = (S.x(N) * derivative(W)).truncate(N - 1) - W.truncate(N - 1)
    assert all(X2[j] == (j - 1) * k[j] for j in range(1, N))


def test_reciprocal_examples():
    x = S.x(N)
    assert reciprocal(1 - x) == S([1] * (N + 1), N)
    assert reciprocal(S.one(N)) == S.one(N)
    assert reciprocal(1 - x * x) == S([1 - j % 2 for j in range(N + 1)], N)
    with pytest.raises(SeriesError):
        reciprocal(x)


def test_pow_rational_examples():
    x = S.x(20)
    f = pow_rational(1 - 4 * x * x, Fraction(-1, 2))
    assert all(f[2 * k] == comb(2 * k, k) and f[2 * k + 1] == 0 for k in range(10))
    g = pow_rational(1 - 4 * x * x, Fraction(-5, 2)).shift(4)
    assert (g[4], g[6], g[8]) == (1, 10, 70)
    with pytest.raises(SeriesError):
        pow_rational(2 + x, Fraction(1, 2))


def test_pow_rational_polynomial_coefficients():
    y = KappaPolynomial.y()
    f = S([1, y, 3 * y * y], 8)
    h = pow_rational(f, Fraction(1, 2))
    assert h * h == f


def test_fixed_point_doublets():
    W = S.monomial(2, 12)
    Z = solve_fixed_point(W)
    assert [Z[2 * k] for k in range(7)] == [catalan(k) for k in range(7)]
    assert all(Z[2 * k + 1] == 0 for k in range(6))


def test_fixed_point_catalan():
    W = S([0] + [1] * 12, 12)        # x/(1-x)
    Z = solve_fixed_point(W)
    assert [Z[k] for k in range(13)] == [catalan(k) for k in range(13)]
    assert inverse_relation_holds(W, Z)


def test_fixed_point_fuss_catalan():
    W = S.monomial(3, 15)
    Z = solve_fixed_point(W)
    xZ = Z.shift(1).truncate(15)
    assert xZ ** 3 - Z + 1 == S.zero(15)
    assert [Z[3 * k] for k in range(6)] == [comb(3 * k, k) // (2 * k + 1) for k in range(6)]


@given(st.lists(rationals, min_size=8, max_size=8))
@settings(max_examples=40, deadline=None)
def test_fixed_point_lagrange(ks):
    """[x^n] Z = [t^n] (1 + W)^{n+1} / (n + 1), by Lagrange inversion."""
    W = S([0] + ks, 8)
    Z = solve_fixed_point(W)
    assert inverse_relation_holds(W, Z)
    for n in range(9):
        assert Z[n] == ((1 + W) ** (n + 1))[n] / (n + 1)


def test_symbolic_fixed_point_matches_kreweras_m4():
    k = [None] + [KappaPolynomial.kappa(i) for i in range(1, 7)]
    Z = solve_fixed_point(S([0] + k[1:], 6))
    want = k[4] + 4 * k[3] * k[1] + 2 * k[2] ** 2 + 6 * k[2] * k[1] ** 2 + k[1] ** 4
    assert Z[4] == want


def test_shift_and_printing():
    x = S.x(6)
    assert (x * x).shift(-2) == S.one(4)
    with pytest.raises(SeriesError):
        x.shift(-2)
    assert str(S([1, 0, 3], 3)) == "1 + 3*x^2 + O(x^4)"
    assert S([1, 0, Fraction(1, 2)], 3).to_json()[1] == {
        "power": 2, "coefficient": [{"coeff": "1/2", "exponents": {}}]}
