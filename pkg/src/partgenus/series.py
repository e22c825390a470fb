"""Truncated formal power series in ``x`` with exact coefficients.

Coefficients are either plain rationals (``int``/``Fraction``, the numeric
mode) or :class:`~partgenus.poly.KappaPolynomial` (the symbolic mode).  A
series carries its truncation order ``N`` and is exact through ``x^N``.
Binary operations on series of different orders truncate to the smaller one.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import KappaPolynomial, _norm

log = logging.getLogger(__name__)


def _is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction))


class SeriesError(ArithmeticError):
    pass


class TruncatedSeries:
    """``c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("negative truncation order")
        cs = list(coeffs)[: order + 1]
        cs += [0] * (order + 1 - len(cs))
        self.coeffs = cs
        self.order = order

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> TruncatedSeries:
        cs = [0] * (order + 1)
        if power <= order:
            cs[power] = coeff
        return cls(cs, order)

    @classmethod
    def from_dict(cls, terms: dict[int, object], order: int) -> TruncatedSeries:
        cs = [0] * (order + 1)
        for k, c in terms.items():
            if k <= order:
                cs[k] = c
        return cls(cs, order)

    # -- access -------------------------------------------------------
    def __getitem__(self, k: int):
        if k < 0:
            return 0
        if k > self.order:
            raise IndexError(f"coefficient x^{k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend a series known to order {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order)

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_symbolic(self) -> bool:
        return any(isinstance(c, KappaPolynomial) for c in self.coeffs)

    def map(self, fn) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    def subs(self, values) -> TruncatedSeries:
        """Substitute polynomial variables in every coefficient."""
        return self.map(lambda c: c.subs(values) if isinstance(c, KappaPolynomial) else c)

    # -- ring operations ----------------------------------------------
    def _common(self, other: TruncatedSeries) -> int:
        if self.order != other.order:
            log.debug("order mismatch %d vs %d: truncating", self.order, other.order)
        return min(self.order, other.order)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if _is_scalar(other) or isinstance(other, KappaPolynomial):
            return TruncatedSeries([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = self._common(other)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(N + 1)], N)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other) or isinstance(other, KappaPolynomial):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        N = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (N + 1)
        nz_b = [(j, c) for j, c in enumerate(b[: N + 1]) if c]
        for i in range(N + 1):
            ai = a[i]
            if not ai:
                continue
            for j, bj in nz_b:
                if i + j > N:
                    break
                out[i + j] = out[i + j] + ai * bj
        return TruncatedSeries(out, N)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedSeries:
        if not isinstance(e, int):
            raise TypeError("use pow_rational for non-integer exponents")
        if e < 0:
            return reciprocal(self) ** (-e)
        out = TruncatedSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __truediv__(self, other):
        if _is_scalar(other):
            q = _norm(Fraction(1) / other)
            return self * q
        if isinstance(other, TruncatedSeries):
            return self * reciprocal(other)
        return NotImplemented

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``x^k`` (k >= 0) or divide by ``x^{-k}`` (k < 0).

        Multiplying raises the known order by ``k``; dividing requires the low
        coefficients to vanish and lowers it.
        """
        if k >= 0:
            return TruncatedSeries([0] * k + self.coeffs, self.order + k)
        if any(self.coeffs[: -k]):
            raise SeriesError(f"series is not divisible by x^{-k}")
        return TruncatedSeries(self.coeffs[-k:], self.order + k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(N + 1))

    __hash__ = None

    # -- printing -----------------------------------------------------
    def __str__(self):
        pieces = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = str(c)
            if isinstance(c, KappaPolynomial) and len(c.terms) > 1:
                cs = f"({cs})"
            if k == 0:
                pieces.append(cs)
            elif k == 1:
                pieces.append(f"{cs}*x")
            else:
                pieces.append(f"{cs}*x^{k}")
        pieces.append(f"O(x^{self.order + 1})")
        return " + ".join(pieces)

    def __repr__(self):
        return f"TruncatedSeries({self})"

    def to_json(self) -> list[dict]:
        out = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if isinstance(c, KappaPolynomial):
                out.append({"power": k, "coefficient": c.to_json()})
            else:
                out.append({"power": k, "coefficient": [{"coeff": str(c), "exponents": {}}]})
        return out


def add(a, b):
    return a + b


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def derivative(f: TruncatedSeries) -> TruncatedSeries:
    """Termwise d/dx; the result is known to order ``N - 1``."""
    return TruncatedSeries([k * f.coeffs[k] for k in range(1, f.order + 1)], max(f.order - 1, 0))


def powers(g: TruncatedSeries, upto: int) -> list[TruncatedSeries]:
    """``[1, g, g^2, ..., g^upto]`` truncated at ``g.order``."""
    out = [TruncatedSeries.one(g.order)]
    for _ in range(upto):
        out.append(out[-1] * g)
    return out


def compose(f: TruncatedSeries, g: TruncatedSeries,
            g_powers: Sequence[TruncatedSeries] | None = None) -> TruncatedSeries:
    """``f(g(x))``; ``g`` must have zero constant term.

    ``g_powers`` may supply precomputed powers of ``g`` (see :func:`powers`)
    when many series are composed with the same inner series.
    """
    if g.coeffs[0]:
        raise SeriesError("inner series of a composition needs zero constant term")
    N = min(f.order, g.order)
    if g_powers is not None:
        out = [0] * (N + 1)
        for k in range(min(N, len(g_powers) - 1) + 1):
            fk = f.coeffs[k]
            if not fk:
                continue
            pk = g_powers[k].coeffs
            # g^k has valuation >= k
            for j in range(k, N + 1):
                if pk[j]:
                    out[j] = out[j] + fk * pk[j]
        return TruncatedSeries(out, N)
    g = g.truncate(N)
    out = TruncatedSeries([f.coeffs[N]], N)
    for k in range(N - 1, -1, -1):
        out = out * g + f.coeffs[k]
    return out


def _invert_scalar(c):
    if isinstance(c, KappaPolynomial):
        if not c.is_constant():
            raise SeriesError("constant term is not an invertible scalar")
        c = c.constant_term()
    if not c:
        raise SeriesError("zero constant term has no inverse")
    return _norm(Fraction(1) / c)


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """``1/f`` through order N; the constant term must be a nonzero scalar."""
    inv0 = _invert_scalar(f.coeffs[0])
    N = f.order
    a = f.coeffs
    nz = [(k, a[k]) for k in range(1, N + 1) if a[k]]
    r = [0] * (N + 1)
    r[0] = inv0
    for n in range(1, N + 1):
        s = 0
        for k, ak in nz:
            if k > n:
                break
            s = s + ak * r[n - k]
        r[n] = -s * inv0 if inv0 != 1 else -s
    return TruncatedSeries(r, N)


def pow_rational(f: TruncatedSeries, e) -> TruncatedSeries:
    """``f^e`` for rational ``e`` by the binomial recurrence ``f g' = e f' g``.

    Requires constant term 1.  Coefficients may be rationals or polynomials:
    the recurrence only divides by integers.
    """
    e = Fraction(e)
    c0 = f.coeffs[0]
    if c0 != 1:
        raise SeriesError("pow_rational needs constant term 1")
    N = f.order
    a = f.coeffs
    nz = [(k, a[k]) for k in range(1, N + 1) if a[k]]
    g = [0] * (N + 1)
    g[0] = 1
    for n in range(1, N + 1):
        s = 0
        for k, ak in nz:
            if k > n:
                break
            w = _norm((e + 1) * k - n)
            if w:
                s = s + ak * g[n - k] * w
        g[n] = s * _norm(Fraction(1, n)) if n > 1 else s
    return TruncatedSeries(g, N)


def solve_fixed_point(W: TruncatedSeries, check: bool = True) -> TruncatedSeries:
    """The series ``Z`` with ``Z = 1 + W(x Z)`` through order N.

    Iterates ``Z <- 1 + W(x Z)`` from ``Z = 1``; iteration ``k`` fixes the
    coefficient of ``x^k``, so each step works at order ``k`` only.
    """
    if W.coeffs[0]:
        raise SeriesError("W must have zero constant term")
    N = W.order
    Z = TruncatedSeries.one(N)
    for k in range(1, N + 1):
        Wk = W.truncate(k)
        Zk = Z.truncate(k)
        nxt = TruncatedSeries.one(k) + compose(Wk, Zk.shift(1).truncate(k))
        Z = TruncatedSeries(nxt.coeffs, N)
    if check:
        again = TruncatedSeries.one(N) + compose(W, Z.shift(1).truncate(N))
        if again != Z:
            raise SeriesError("fixed-point iteration did not converge")
    return Z


def inverse_relation_holds(W: TruncatedSeries, Z: TruncatedSeries) -> bool:
    """Check that ``x Z(x)`` inverts ``t / (1 + W(t))`` under composition.

    This is the inverse-function form of ``Z = 1 + W(xZ)`` (the R-transform
    relation), computed along an independent route: a reciprocal then a
    composition, no fixed-point iteration.
    """
    N = min(W.order, Z.order)
    t_over = TruncatedSeries.x(N) * reciprocal(TruncatedSeries.one(N) + W.truncate(N))
    xt = Z.truncate(N).shift(1).truncate(N)
    return compose(t_over, xt) == TruncatedSeries.x(N)
