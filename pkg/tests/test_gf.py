from fractions import Fraction
from math import comb

import pytest

from partgenus import published
from partgenus.enumeration import count_by_genus
from partgenus.gf import (Z2_COEFFICIENTS, CumulantSpec, X_series, Y_series, Z0, Z1, Z1_forms,
                          Z2, build_W, dressing, genus2_parts_gf, genus3_doublet_series,
                          oracle_polynomial, singleton_transform, y_coefficient)
from partgenus.poly import Y, KappaPolynomial, kappa_var
from partgenus.reduction import CENSUS_COLUMNS
from partgenus.series import TruncatedSeries, derivative

S = TruncatedSeries


def test_build_W():
    assert build_W(CumulantSpec("doublets"), 8) == S.monomial(2, 8)
    assert build_W(CumulantSpec("all_ones"), 8) == S([0] + [1] * 8, 8)
    assert build_W(CumulantSpec("singleton_free_ones"), 8) == S([0, 0] + [1] * 7, 8)
    assert build_W(CumulantSpec.parse("custom=1,1/2"), 4) == S([0, 1, Fraction(1, 2)], 4)


def test_spec_parse():
    assert CumulantSpec.parse("sf-ones").mode == "singleton_free_ones"
    assert CumulantSpec.parse("y").mode == "all_y"
    with pytest.raises(ValueError):
        CumulantSpec.parse("bogus")


def test_dressing_definitions():
    d = dressing(CumulantSpec("doublets"), 10)
    assert X_series(CumulantSpec("doublets"), 2, 10) == S.monomial(2, 10)
    assert Y_series(CumulantSpec("doublets"), 2, 10) == S.monomial(2, 10)
    assert d.X2 == d.xt * d.xt
    tri = CumulantSpec("triplets")
    assert X_series(tri, 3, 10) == S.monomial(3, 10)
    assert Y_series(tri, 3, 10) == S.monomial(3, 10)


def test_symbolic_X2_Y2_Y3():
    spec = CumulantSpec("symbolic")
    N = 8
    W = build_W(spec, N)
    x = S.x(N)
    W1, W2, W3 = derivative(W), derivative(derivative(W)), derivative(derivative(derivative(W)))
    assert X_series(spec, 2, N) == (x * W1 - W).truncate(N - 1)
    assert Y_series(spec, 2, N) == (x * x * W2 / 2).truncate(N - 2)
    assert Y_series(spec, 3, N) == (x ** 3 * W3 / 6).truncate(N - 3)


def test_Z0_examples():
    assert [Z0(CumulantSpec("all_ones"), 6)[n] for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    z = Z0(CumulantSpec("all_y"), 8)
    for n in range(1, 9):
        for k in range(1, n + 1):
            narayana = comb(n, k) * comb(n, k - 1) // n
            assert z[n].coefficient({Y: k}) == narayana
    k = [None] + [KappaPolynomial.kappa(i) for i in range(1, 5)]
    assert Z0(CumulantSpec("symbolic"), 4)[4] == (k[4] + 4 * k[3] * k[1] + 2 * k[2] ** 2
                                                 + 6 * k[2] * k[1] ** 2 + k[1] ** 4)


def test_low_orders_vanish():
    spec = CumulantSpec("symbolic")
    z1, z2 = Z1(spec, 8), Z2(spec, 8)
    assert all(z1[n] == 0 for n in range(4)) and z1[4] != 0
    assert all(z2[n] == 0 for n in range(6)) and z2[6] != 0


def test_Z1_forms_agree_symbolically():
    main, alt = Z1_forms(CumulantSpec("symbolic"), 10)
    assert main == alt


@pytest.mark.parametrize("g", [0, 1, 2])
def test_symbolic_oracle_small(g):
    z = {0: Z0, 1: Z1, 2: Z2}[g](CumulantSpec("symbolic"), 9)
    for n in range(1, 10):
        assert z[n] == oracle_polynomial(n, g, count_by_genus(n))


def test_custom_numeric_against_enumeration():
    spec = CumulantSpec.parse("custom=1/2,3,-1,2")
    z2 = Z2(spec, 10)
    for n in range(6, 11):
        poly = oracle_polynomial(n, 2, count_by_genus(n))
        vals = {kappa_var(k): spec.kappa(k) for k in range(1, n + 1)}
        assert z2[n] == poly.subs(vals)


def test_doublet_fixtures():
    d = CumulantSpec("doublets")
    assert Z1(d, 16) == published.doublets_Z1(16)
    assert Z2(d, 16) == published.doublets_Z2(16)
    assert Z0(d, 16) == published.doublets_Z0(16)


def test_triplet_fixtures():
    t = CumulantSpec("triplets")
    z1, z2 = Z1(t, 21), Z2(t, 21)
    assert all(z1[k] == published.TRIPLETS_Z1.get(k, 0) for k in range(22))
    assert all(z2[k] == published.TRIPLETS_Z2.get(k, 0) for k in range(22))


def test_singleton_transform_roundtrip():
    for mode in ("all_ones", "doublets", "triplets"):
        z = Z1(CumulantSpec(mode), 20)
        for k1 in (1, Fraction(-2, 3), 5):
            back = singleton_transform(singleton_transform(z, k1, "remove"), k1, "insert")
            assert back == z


def test_singleton_transform_published_pairs():
    N = 20
    assert singleton_transform(published.sf_ones_Z1(N), 1, "insert") == published.ones_Z1(N)
    assert singleton_transform(published.sf_ones_Z2(N), 1, "insert") == published.ones_Z2(N)
    assert singleton_transform(published.ones_Z0(N), 1, "remove") == published.sf_ones_Z0(N)


def test_singleton_transform_bad_direction():
    with pytest.raises(ValueError):
        singleton_transform(S.one(3), 1, "sideways")


def test_genus2_by_parts():
    N = 14
    full = genus2_parts_gf(N)
    sf = genus2_parts_gf(N, singleton_free=True)
    assert y_coefficient(full, 2) == published.genus2_two_parts(N)
    assert y_coefficient(sf, 3) == published.genus2_three_parts(N)
    assert published.genus2_three_parts(N) == published.genus2_three_parts_closed(N)
    assert full == published.y_Z2(N)
    assert full.subs({Y: 1}) == Z2(CumulantSpec("all_ones"), N)


def test_genus3_doublets():
    s = genus3_doublet_series(16)
    assert s[12] == 1485 and s[11] == 0
    with pytest.raises(ValueError):
        genus3_doublet_series(10)


# Each printed coefficient is a census count N times (edges of the rooted
# vertex kind) / n: rooting one edge of an n-point diagram.
# family: (census column, points besides the 2-vertices, offset p - power, rooted edges w(p))
FAMILIES = {
    "z2": ("two_vertices_only", 0, 1, lambda p: 2 * p),
    "z3_Y2": ("one_3vertex", 3, 1, lambda p: 2 * p),
    "z3_Y3": ("one_3vertex", 3, 1, lambda p: 3),
    "z33_Y2": ("two_3vertices_prim", 6, 1, lambda p: 2 * p),
    "z33_Y3": ("two_3vertices_prim", 6, 0, lambda p: 6),
    "z33s_Y2": ("two_3vertices_semiprim", 6, 2, lambda p: 2 * p),
    "z33s_Y3": ("two_3vertices_semiprim", 6, 2, lambda p: 6),
    "z33s_bare": ("two_3vertices_semiprim", 6, 2, lambda p: 10),
    "z4_Y2": ("one_4vertex", 4, 1, lambda p: 2 * p),
    "z4_Y4": ("one_4vertex", 4, 0, lambda p: 4),
}


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_genus2_coefficients_follow_from_census(name):
    col, extra, offset, w = FAMILIES[name]
    j = CENSUS_COLUMNS.index(col)
    derived = {}
    for n, row in published.CENSUS_GENUS2.items():
        if row[j] and (n - extra) % 2 == 0:
            p = (n - extra) // 2
            value = Fraction(row[j] * w(p), n)
            assert value.denominator == 1
            if value:
                derived[p - offset] = int(value)
    assert derived == Z2_COEFFICIENTS[name]
