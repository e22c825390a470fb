"""Sparse multivariate polynomials with exact rational coefficients.

The variables are the cumulants ``k1, k2, ...`` plus two bookkeeping symbols,
``eps`` (genus weight) and ``y`` (number of parts).  A monomial is packed
into one Python int, 16 bits of exponent per variable, so multiplying
monomials is a single integer addition.  Exponents must stay below 2**16;
truncated series never get near that.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .partition import PartitionType

EPS = 0
Y = 1
_BITS = 16
_MASK = (1 << _BITS) - 1


def kappa_var(k: int) -> int:
    """Variable id of the cumulant ``k_k`` (k >= 1)."""
    if k < 1:
        raise ValueError("cumulant index starts at 1")
    return k + 1


def var_name(v: int) -> str:
    if v == EPS:
        return "eps"
    if v == Y:
        return "y"
    return f"k{v - 1}"


def pack(exponents: Mapping[int, int]) -> int:
    m = 0
    for v, e in exponents.items():
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent {e} out of range")
        m |= e << (_BITS * v)
    return m


def unpack(m: int) -> dict[int, int]:
    out = {}
    v = 0
    while m:
        e = m & _MASK
        if e:
            out[v] = e
        m >>= _BITS
        v += 1
    return out


def _norm(q):
    """Collapse integral Fractions back to int (ints are much faster)."""
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


class KappaPolynomial:
    """Polynomial in ``k1..kK, eps, y`` over the rationals.

    Immutable by convention: operations return new objects.  Scalars
    (``int``/``Fraction``) mix freely on either side of ``+ - *``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> KappaPolynomial:
        return cls({0: _norm(Fraction(c))})

    @classmethod
    def var(cls, v: int) -> KappaPolynomial:
        return cls({1 << (_BITS * v): 1})

    @classmethod
    def kappa(cls, k: int) -> KappaPolynomial:
        return cls.var(kappa_var(k))

    @classmethod
    def eps(cls) -> KappaPolynomial:
        return cls.var(EPS)

    @classmethod
    def y(cls) -> KappaPolynomial:
        return cls.var(Y)

    @classmethod
    def monomial(cls, exponents: Mapping[int, int], coeff=1) -> KappaPolynomial:
        return cls({pack(exponents): coeff})

    @classmethod
    def kappa_monomial(cls, t: PartitionType, coeff=1, eps_power=0) -> KappaPolynomial:
        """``coeff * eps^eps_power * prod_l k_l^{alpha_l}``."""
        exps = {kappa_var(s): m for s, m in t.multiplicities}
        if eps_power:
            exps[EPS] = eps_power
        return cls.monomial(exps, coeff)

    # -- inspection ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_term(self):
        return self.terms.get(0, 0)

    def variables(self) -> set[int]:
        out = set()
        for m in self.terms:
            out.update(unpack(m))
        return out

    def coefficient(self, exponents: Mapping[int, int]):
        return self.terms.get(pack(exponents), 0)

    def by_type(self) -> dict[tuple[PartitionType, int], Rational]:
        """Split into ``{(type, eps power): coefficient}``.

        Only ``k`` and ``eps`` variables may appear; the constant term maps
        to ``(None, 0)``.
        """
        out = {}
        for m, c in self.terms.items():
            exps = unpack(m)
            e = exps.pop(EPS, 0)
            if Y in exps:
                raise ValueError("polynomial involves y")
            sizes = [v - 1 for v, a in exps.items() for _ in range(a)]
            t = PartitionType.from_sizes(sizes) if sizes else None
            out[(t, e)] = c
        return out

    def subs(self, values: Mapping[int, Rational | KappaPolynomial]) -> KappaPolynomial | Rational:
        """Substitute variables (by id) with scalars or polynomials."""
        out = KappaPolynomial()
        for m, c in self.terms.items():
            exps = unpack(m)
            term = KappaPolynomial({0: c})
            keep = {}
            for v, e in exps.items():
                if v in values:
                    term = term * values[v] ** e
                else:
                    keep[v] = e
            if keep:
                term = term * KappaPolynomial({pack(keep): 1})
            out = out + term
        return out.scalar_if_constant()

    def scalar_if_constant(self):
        if self.is_constant():
            return self.constant_term()
        return self

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            out = dict(self.terms)
            out[0] = _norm(out.get(0, 0) + other)
            return KappaPolynomial(out)
        if not isinstance(other, KappaPolynomial):
            return NotImplemented
        if len(other.terms) > len(self.terms):
            self, other = other, self
        out = dict(self.terms)
        get = out.get
        for m, c in other.terms.items():
            out[m] = get(m, 0) + c
        return KappaPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return KappaPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return KappaPolynomial()
            return KappaPolynomial({m: _norm(c * other) for m, c in self.terms.items()})
        if not isinstance(other, KappaPolynomial):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Rational] = {}
        get = out.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = m1 + m2
                out[m] = get(m, 0) + c1 * c2
        return KappaPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, KappaPolynomial):
            if not other.is_constant() or not other:
                raise ZeroDivisionError("division by a non-constant or zero polynomial")
            other = other.constant_term()
        q = Fraction(1) / other
        return self * _norm(q)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        out = KappaPolynomial({0: 1})
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = KappaPolynomial({0: other})
        if not isinstance(other, KappaPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- printing -----------------------------------------------------
    @staticmethod
    def _monomial_str(exps: dict[int, int]) -> str:
        # cumulants by decreasing index, then eps, then y
        order = sorted((v for v in exps if v > Y), reverse=True) + [v for v in (EPS, Y) if v in exps]
        return "*".join(var_name(v) + (f"^{exps[v]}" if exps[v] > 1 else "") for v in order)

    def sorted_terms(self) -> list[tuple[dict[int, int], Rational]]:
        def key(item):
            exps = item[0]
            kap = tuple(sorted(((v, e) for v, e in exps.items() if v > Y), reverse=True))
            return (tuple(-x for pair in kap for x in pair), exps.get(EPS, 0), exps.get(Y, 0))

        return sorted(((unpack(m), c) for m, c in self.terms.items()), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = self._monomial_str(exps)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"KappaPolynomial({self})"

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "exponents": {var_name(v): e for v, e in exps.items()}}
                for exps, c in self.sorted_terms()]


def kappas(K: int) -> list[KappaPolynomial]:
    """``[None, k1, ..., kK]`` so that ``kappas(K)[j]`` is ``k_j``."""
    return [None] + [KappaPolynomial.kappa(k) for k in range(1, K + 1)]


def polynomial_sum(items: Iterable[KappaPolynomial]) -> KappaPolynomial:
    out: dict[int, Rational] = {}
    get = out.get
    for p in items:
        for m, c in p.terms.items():
            out[m] = get(m, 0) + c
    return KappaPolynomial(out)
