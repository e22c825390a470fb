"""Published closed forms and Taylor coefficients, expanded exactly.

These are regression fixtures: the generating-function code never uses
them.  Radicals are expanded with :func:`~partgenus.series.pow_rational`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .poly import KappaPolynomial
from .series import TruncatedSeries, pow_rational, reciprocal


def _s(coeffs: dict[int, object], N: int) -> TruncatedSeries:
    return TruncatedSeries.from_dict(coeffs, N)


def _y():
    return KappaPolynomial.y()


# -- doublets: W = x^2 ------------------------------------------------------

def doublets_Z0(N: int) -> TruncatedSeries:
    """``(1 - sqrt(1 - 4x^2)) / (2x^2)``."""
    root = pow_rational(_s({0: 1, 2: -4}, N + 2), Fraction(1, 2))
    return (1 - root).shift(-2) * Fraction(1, 2)


def doublets_Z1(N: int) -> TruncatedSeries:
    return pow_rational(_s({0: 1, 2: -4}, N), Fraction(-5, 2)).shift(4).truncate(N)


def doublets_Z2(N: int) -> TruncatedSeries:
    base = pow_rational(_s({0: 1, 2: -4}, N), Fraction(-11, 2))
    return (base * _s({8: 21, 10: 21}, N)).truncate(N)


def doublets_Z3(N: int) -> TruncatedSeries:
    base = pow_rational(_s({0: 1, 2: -4}, N), Fraction(-17, 2))
    return base * _s({12: 11 * 135, 14: 11 * 558, 16: 11 * 158}, N)


# -- triplets: W = x^3, published Taylor coefficients -----------------------

TRIPLETS_Z1 = {6: 6, 9: 102, 12: 1212, 15: 12330, 18: 114888, 21: 1011486, 24: 8558712,
               27: 70324884, 30: 564931230}
TRIPLETS_Z2 = {6: 1, 9: 144, 12: 6046, 15: 149674, 18: 2771028, 21: 42679084}


# -- all cumulants 1 ----------------------------------------------------------

def ones_Z0(N: int) -> TruncatedSeries:
    """Catalan: ``(1 - sqrt(1 - 4x)) / (2x)``."""
    root = pow_rational(_s({0: 1, 1: -4}, N + 1), Fraction(1, 2))
    return (1 - root).shift(-1) * Fraction(1, 2)


def ones_Z1(N: int) -> TruncatedSeries:
    return (pow_rational(_s({0: 1, 1: -4}, N), Fraction(-5, 2)).shift(4)).truncate(N)


def ones_Z2(N: int) -> TruncatedSeries:
    base = pow_rational(_s({0: 1, 1: -4}, N), Fraction(-11, 2))
    return base * _s({6: 1, 7: 6, 8: -19, 9: 21}, N)


# -- cumulants 1 except k_1 = 0 ---------------------------------------------

def _sf_disc(N):
    return _s({0: 1, 1: -2, 2: -3}, N)


def sf_ones_Z0(N: int) -> TruncatedSeries:
    """``(1 + x - sqrt(1 - 2x - 3x^2)) / (2x(1 + x))``."""
    root = pow_rational(_sf_disc(N + 1), Fraction(1, 2))
    num = (_s({0: 1, 1: 1}, N + 1) - root).shift(-1) * Fraction(1, 2)
    return num * reciprocal(_s({0: 1, 1: 1}, N))


def sf_ones_Z1(N: int) -> TruncatedSeries:
    return pow_rational(_sf_disc(N), Fraction(-5, 2)).shift(4).truncate(N)


def sf_ones_Z2(N: int) -> TruncatedSeries:
    base = pow_rational(_sf_disc(N), Fraction(-11, 2))
    return base * _s({6: 1, 7: 10, 8: 5, 9: 5, 10: 9}, N)


# -- all cumulants y (y marks the number of parts) ---------------------------

def _y_disc(N):
    """``(1 + x - xy)^2 - 4x``."""
    y = _y()
    lin = _s({0: 1, 1: 1 - y}, N)
    return lin * lin - TruncatedSeries.monomial(1, N, 4)


def y_Z0(N: int) -> TruncatedSeries:
    """Narayana: ``(1 + x - xy - sqrt(D)) / (2x)``."""
    y = _y()
    root = pow_rational(_y_disc(N + 1), Fraction(1, 2))
    return (_s({0: 1, 1: 1 - y}, N + 1) - root).shift(-1) * Fraction(1, 2)


def y_Z1(N: int) -> TruncatedSeries:
    y = _y()
    return (pow_rational(_y_disc(N), Fraction(-5, 2)) * (y * y)).shift(4).truncate(N)


def y_genus2_numerator(N: int) -> TruncatedSeries:
    """The polynomial ``p(x, y)`` in the genus-2 two-variable form."""
    y = _y()
    return _s({0: 1,
               1: -(4 - 10 * y),
               2: 6 - 10 * y - 15 * y * y,
               3: -(4 + 10 * y - 39 * y * y + 4 * y ** 3),
               4: 1 + 10 * y - 15 * y * y - 4 * y ** 3 + 8 * y ** 4}, N)


def y_Z2(N: int) -> TruncatedSeries:
    y = _y()
    base = pow_rational(_y_disc(N), Fraction(-11, 2))
    return (base * y_genus2_numerator(N) * (y * y)).shift(6).truncate(N)


def _sf_y_disc(N):
    """``(1 - x)^2 - 4x^2 y``."""
    return _s({0: 1, 1: -2, 2: 1 - 4 * _y()}, N)


def sf_y_Z0(N: int) -> TruncatedSeries:
    """``(1 + x - sqrt((1-x)^2 - 4x^2 y)) / (2x(1 + xy))``."""
    y = _y()
    root = pow_rational(_sf_y_disc(N + 1), Fraction(1, 2))
    num = (_s({0: 1, 1: 1}, N + 1) - root).shift(-1) * Fraction(1, 2)
    return num * reciprocal(_s({0: 1, 1: y}, N))


def sf_y_Z1(N: int) -> TruncatedSeries:
    y = _y()
    return (pow_rational(_sf_y_disc(N), Fraction(-5, 2)) * (y * y)).shift(4).truncate(N)


# -- genus 2 by number of parts ----------------------------------------------

def genus2_two_parts(N: int) -> TruncatedSeries:
    """``x^6 / (1 - x)^7``, i.e. ``sum C(n, 6) x^n``."""
    return TruncatedSeries([comb(n, 6) for n in range(N + 1)], N)


def genus2_three_parts(N: int) -> TruncatedSeries:
    """``14 x^7 (1 + 2x) / (1 - x)^9``, i.e. ``sum 14 C(n,7)(3n-13)/8 x^n``."""
    return TruncatedSeries([Fraction(14 * comb(n, 7) * (3 * n - 13), 8) for n in range(N + 1)], N)


def genus2_three_parts_closed(N: int) -> TruncatedSeries:
    base = pow_rational(_s({0: 1, 1: -1}, N), -9)
    return base * _s({7: 14, 8: 28}, N)


# -- moment polynomials -------------------------------------------------------

def moment_polynomials() -> dict[int, KappaPolynomial]:
    """``m_1 .. m_5`` as printed, with ``eps`` weighting the genus."""
    k = [None] + [KappaPolynomial.kappa(i) for i in range(1, 6)]
    e = KappaPolynomial.eps()
    return {
        1: k[1],
        2: k[2] + k[1] ** 2,
        3: k[3] + 3 * k[2] * k[1] + k[1] ** 3,
        4: k[4] + (2 + e) * k[2] ** 2 + 4 * k[3] * k[1] + 6 * k[2] * k[1] ** 2 + k[1] ** 4,
        5: (k[5] + 5 * k[4] * k[1] + 5 * (1 + e) * k[3] * k[2] + 10 * k[3] * k[1] ** 2
            + 5 * (2 + e) * k[2] ** 2 * k[1] + 10 * k[2] * k[1] ** 3 + k[1] ** 5),
    }


# -- genus-2 primitive and semi-primitive census ------------------------------

CENSUS_GENUS2 = {
    #  n: (2-vertices, one 3-vertex, two 3-vertices, two 3-vertices semi-prim., one 4-vertex)
    6: (0, 0, 1, 0, 0),
    7: (0, 14, 0, 0, 0),
    8: (21, 0, 20, 0, 6),
    9: (0, 141, 0, 0, 0),
    10: (168, 0, 65, 15, 15),
    11: (0, 407, 0, 0, 0),
    12: (483, 0, 52, 36, 9),
    13: (0, 455, 0, 0, 0),
    14: (651, 0, 0, 21, 0),
    15: (0, 175, 0, 0, 0),
    16: (420, 0, 0, 0, 0),
    17: (0, 0, 0, 0, 0),
    18: (105, 0, 0, 0, 0),
}
