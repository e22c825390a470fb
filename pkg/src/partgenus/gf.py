"""Generating functions of partitions by genus, for genus 0, 1 and 2.

With ``W(x) = sum_l k_l x^l`` the genus-0 series solves ``Z0 = 1 + W(x Z0)``.
Genus 1 and 2 follow by "dressing" the finitely many primitive diagrams:
every chord structure is fattened by the series below, all evaluated at
``xt = x Z0(x)``:

    X_l(x) = sum_{k>=l} C(k-1, l-1) k_k x^k     Y_l(x) = sum_{k>=l} C(k, l) k_k x^k
    V(x)   = x W'(xt)
    Xt_2   = X_2(xt) / (1 - X_2(xt))            Yt_2 = Y_2(xt) / (1 - X_2(xt))^2
    Xt_l   = X_l(xt) / (1 - X_2(xt))^l          Yt_l = Y_l(xt) / (1 - X_2(xt))^l   (l > 2)

Coefficients are exact: plain rationals for numeric cumulants, or
:class:`~partgenus.poly.KappaPolynomial` in symbolic mode.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .poly import KappaPolynomial
from .series import (SeriesError, TruncatedSeries, compose, derivative, powers, reciprocal,
                     solve_fixed_point)

log = logging.getLogger(__name__)

DEFAULT_ORDER = 20
DEFAULT_SYMBOLIC_ORDER = 12

MODES = ("symbolic", "all_ones", "all_y", "doublets", "triplets", "singleton_free_ones",
         "singleton_free_y", "custom")

# CLI spellings
ALIASES = {"ones": "all_ones", "y": "all_y", "sf-ones": "singleton_free_ones",
           "sf-y": "singleton_free_y"}


@dataclass(frozen=True)
class CumulantSpec:
    """A choice of cumulants ``k_1, k_2, ...`` fixing ``W``.

    ``values`` holds ``k_1..k_K`` for ``custom`` (later ones vanish);
    ``indices`` restricts ``symbolic`` mode to a subset of the ``k_l``.
    """

    mode: str = "symbolic"
    values: tuple = ()
    indices: frozenset | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown cumulant mode {self.mode!r}; expected one of {MODES}")

    @classmethod
    def parse(cls, text: str) -> CumulantSpec:
        """``symbolic``, ``ones``, ``y``, ``sf-ones``, ``custom=1,0,1/2`` ..."""
        text = text.strip()
        if text.startswith("custom="):
            vals = tuple(Fraction(v) for v in text[len("custom="):].split(",") if v.strip())
            return cls("custom", tuple(int(v) if v.denominator == 1 else v for v in vals))
        return cls(ALIASES.get(text, text))

    @property
    def symbolic(self) -> bool:
        return self.mode in ("symbolic", "all_y", "singleton_free_y")

    def kappa(self, k: int):
        m = self.mode
        if m == "symbolic":
            if self.indices is not None and k not in self.indices:
                return 0
            return KappaPolynomial.kappa(k)
        if m == "all_ones":
            return 1
        if m == "all_y":
            return KappaPolynomial.y()
        if m == "doublets":
            return 1 if k == 2 else 0
        if m == "triplets":
            return 1 if k == 3 else 0
        if m == "singleton_free_ones":
            return 1 if k >= 2 else 0
        if m == "singleton_free_y":
            return KappaPolynomial.y() if k >= 2 else 0
        return self.values[k - 1] if k <= len(self.values) else 0

    def kappa1(self):
        return self.kappa(1)

    def __str__(self):
        if self.mode == "custom":
            return "custom=" + ",".join(str(v) for v in self.values)
        return self.mode


def _default_order(spec: CumulantSpec, order: int | None) -> int:
    if order is not None:
        if order < 1:
            raise ValueError("order must be >= 1")
        return order
    return DEFAULT_SYMBOLIC_ORDER if spec.mode == "symbolic" else DEFAULT_ORDER


def build_W(spec: CumulantSpec, order: int | None = None) -> TruncatedSeries:
    N = _default_order(spec, order)
    return TruncatedSeries([0] + [spec.kappa(k) for k in range(1, N + 1)], N)


def X_series(spec: CumulantSpec, l: int, order: int) -> TruncatedSeries:
    """``X_l(x) = sum_{k>=l} C(k-1, l-1) k_k x^k``."""
    return TruncatedSeries([0] * l + [comb(k - 1, l - 1) * spec.kappa(k) for k in range(l, order + 1)],
                           order)


def Y_series(spec: CumulantSpec, l: int, order: int) -> TruncatedSeries:
    """``Y_l(x) = sum_{k>=l} C(k, l) k_k x^k``."""
    return TruncatedSeries([0] * l + [comb(k, l) * spec.kappa(k) for k in range(l, order + 1)], order)


def Z0(spec: CumulantSpec, order: int | None = None) -> TruncatedSeries:
    return solve_fixed_point(build_W(spec, order), check=False)


@dataclass
class DressingFunctions:
    order: int
    Z0: TruncatedSeries
    xt: TruncatedSeries
    X2: TruncatedSeries        # X_2(xt)
    Y2: TruncatedSeries        # Y_2(xt)
    V: TruncatedSeries
    X2t: TruncatedSeries
    Y2t: TruncatedSeries
    Xt: dict                   # l -> Xt_l, l = 3, 4
    Yt: dict
    inv: TruncatedSeries       # 1 / (1 - X_2(xt))


def dressing(spec: CumulantSpec, order: int | None = None) -> DressingFunctions:
    N = _default_order(spec, order)
    W = build_W(spec, N)
    z0 = solve_fixed_point(W, check=False)
    xt = z0.shift(1).truncate(N)
    P = powers(xt, N)

    def at_xt(f):
        return compose(f, xt, P)

    X2 = at_xt(X_series(spec, 2, N))
    Y2 = at_xt(Y_series(spec, 2, N))
    # V = x W'(xt); W' is known to order N-1, so V is exact to order N
    V = compose(derivative(W), xt.truncate(N - 1), [p.truncate(N - 1) for p in P[:N]]).shift(1)
    inv = reciprocal(1 - X2)
    Xt, Yt = {}, {}
    for l in (3, 4):
        scale = inv ** l
        Xt[l] = at_xt(X_series(spec, l, N)) * scale
        Yt[l] = at_xt(Y_series(spec, l, N)) * scale
    return DressingFunctions(N, z0, xt, X2, Y2, V, X2 * inv, Y2 * inv * inv, Xt, Yt, inv)


def _one_minus_V_inv(d: DressingFunctions) -> TruncatedSeries:
    return reciprocal(1 - d.V)


def Z1_forms(spec: CumulantSpec, order: int | None = None,
             d: DressingFunctions | None = None) -> tuple[TruncatedSeries, TruncatedSeries]:
    """The two printed genus-1 forms: ``X2 Y2 / ((1-X2)^4 (1-V))`` at ``xt``,
    and ``Yt2 Xt2 (1 + Xt2) / (1 - V)``."""
    d = d or dressing(spec, order)
    r = _one_minus_V_inv(d)
    main = d.X2 * d.Y2 * d.inv ** 4 * r
    alt = d.Y2t * d.X2t * (1 + d.X2t) * r
    return main, alt


def Z1(spec: CumulantSpec, order: int | None = None,
       d: DressingFunctions | None = None) -> TruncatedSeries:
    main, alt = Z1_forms(spec, order, d)
    if main != alt:
        raise SeriesError("the two genus-1 forms disagree")
    return main


def _poly(u: TruncatedSeries, coeffs: dict[int, int]) -> TruncatedSeries:
    """``sum c_k u^k``."""
    out = TruncatedSeries.zero(u.order)
    for k, c in sorted(coeffs.items()):
        out = out + c * u ** k
    return out


# Polynomials in Xt_2 of the genus-2 terms, as printed: power -> coefficient.
Z2_COEFFICIENTS = {
    "z2": {3: 21, 4: 168, 5: 483, 6: 651, 7: 420, 8: 105},
    "z3_Y2": {1: 8, 2: 94, 3: 296, 4: 350, 5: 140},
    "z3_Y3": {1: 6, 2: 47, 3: 111, 4: 105, 5: 35},
    "z33_Y2": {0: 5, 1: 26, 2: 26},
    "z33_Y3": {0: 1, 1: 15, 2: 39, 3: 26},
    "z33s_Y2": {0: 6, 1: 18, 2: 12},
    "z33s_Y3": {0: 9, 1: 18, 2: 9},
    "z33s_bare": {0: 15, 1: 30, 2: 15},
    "z4_Y2": {1: 3, 2: 9, 3: 6},
    "z4_Y4": {2: 3, 3: 6, 4: 3},
}


def Z2_terms(spec: CumulantSpec, order: int | None = None,
             d: DressingFunctions | None = None) -> dict[str, TruncatedSeries]:
    """The five dressed contributions, before division by ``1 - V``.

    Coded as printed, including the bare ``2 Y_2(xt)/(1 - X_2(xt))`` factors
    and the ``(1 - X_2(xt))`` correction factors of the semi-primitive term.
    """
    d = d or dressing(spec, order)
    X, Y = d.X2t, d.Y2t
    X3, Y3, X4, Y4 = d.Xt[3], d.Yt[3], d.Xt[4], d.Yt[4]
    B = 2 * d.Y2 * d.inv
    one_m = 1 - d.X2
    c = Z2_COEFFICIENTS
    z2 = Y * _poly(X, c["z2"])
    z3 = (X3 * Y * _poly(X, c["z3_Y2"])
          + X * _poly(X, c["z3_Y3"]) * (Y3 + X3 * B))
    z33 = (X3 * X3 * Y * _poly(X, c["z33_Y2"])
           + X3 * _poly(X, c["z33_Y3"]) * (Y3 + X3 * B))
    z33s = (Y * X3 * X3 * X * _poly(X, c["z33s_Y2"]) * one_m
            + Y3 * X3 * X * X * _poly(X, c["z33s_Y3"]) * one_m
            + X3 * X3 * X * X * _poly(X, c["z33s_bare"]) * d.Y2)
    z4 = Y * X4 * _poly(X, c["z4_Y2"]) + _poly(X, c["z4_Y4"]) * (Y4 + X4 * B)
    return {"z2": z2, "z3": z3, "z33": z33, "z33s": z33s, "z4": z4}


def Z2(spec: CumulantSpec, order: int | None = None,
       d: DressingFunctions | None = None) -> TruncatedSeries:
    d = d or dressing(spec, order)
    terms = Z2_terms(spec, d=d)
    total = TruncatedSeries.zero(d.order)
    for t in terms.values():
        total = total + t
    return total * _one_minus_V_inv(d)


def genus_series(g: int, spec: CumulantSpec, order: int | None = None) -> TruncatedSeries:
    if g == 0:
        return Z0(spec, order)
    if g == 1:
        return Z1(spec, order)
    if g == 2:
        return Z2(spec, order)
    raise ValueError("generating functions are implemented for genus 0, 1 and 2")


def singleton_transform(Z: TruncatedSeries, kappa1, direction: str) -> TruncatedSeries:
    """Insert or remove singletons of weight ``kappa1``.

    insert: ``Z(x) = Zh(x/(1 - k1 x)) / (1 - k1 x)``
    remove: ``Zh(u) = Z(u/(1 + k1 u)) / (1 + k1 u)``
    """
    N = Z.order
    if direction == "insert":
        s = -kappa1
    elif direction == "remove":
        s = kappa1
    else:
        raise ValueError("direction must be 'insert' or 'remove'")
    # 1 / (1 + s x) and x / (1 + s x)
    r = reciprocal(TruncatedSeries([1, s], N))
    return r * compose(Z, TruncatedSeries.x(N) * r)


def y_coefficient(f: TruncatedSeries, r: int) -> TruncatedSeries:
    """The series ``[y^r] f`` for a series with polynomial-in-``y`` coefficients."""
    from .poly import Y

    def pick(c):
        if isinstance(c, KappaPolynomial):
            return c.coefficient({Y: r} if r else {})
        return c if r == 0 else 0
    return f.map(pick)


def genus2_parts_gf(order: int | None = None, singleton_free: bool = False) -> TruncatedSeries:
    """Genus-2 series with ``y`` marking the number of parts.

    The published three-part count ``14 x^7 (1+2x)/(1-x)^9`` holds for the
    singleton-free series; the full one adds ``n C(n-1, 6)`` at ``x^n``.
    """
    return Z2(CumulantSpec("singleton_free_y" if singleton_free else "all_y"), order)


def genus3_doublet_series(order: int = 20) -> TruncatedSeries:
    """Expansion of the published closed form for genus-3 pairings."""
    from .published import doublets_Z3
    if order < 12:
        raise ValueError("order must be at least 12")
    return doublets_Z3(order)


def oracle_polynomial(n: int, g: int, table) -> KappaPolynomial:
    """``sum_alpha C^{(g)}_{n,alpha} k_alpha`` from an enumerated count table."""
    out = KappaPolynomial()
    for t, c in table.by_genus(g).items():
        out = out + KappaPolynomial.kappa_monomial(t, c)
    return out


__all__ = [
    "CumulantSpec", "DEFAULT_ORDER", "DEFAULT_SYMBOLIC_ORDER", "DressingFunctions", "MODES",
    "X_series", "Y_series", "Z2_COEFFICIENTS", "Z0", "Z1", "Z1_forms", "Z2", "Z2_terms", "build_W", "dressing",
    "genus2_parts_gf", "genus3_doublet_series", "genus_series", "oracle_polynomial",
    "singleton_transform", "y_coefficient",
]
