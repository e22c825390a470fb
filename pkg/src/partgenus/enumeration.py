"""Exhaustive enumeration of set partitions stratified by genus.

This is the brute-force oracle that every generating-function result is
checked against.  Counting runs in a compiled restricted-growth-string scan
(:mod:`partgenus._kernels`); the candidate space can be split into prefix
shards whose tables merge by plain addition.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Iterator

import numpy as np

from . import _kernels
from .partition import (Partition, PartitionError, PartitionType, rotate,
                        canonical_form, stabilizer_order)
from .poly import KappaPolynomial

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8

CLASSES = ("all", "primitive", "semiprimitive")
_CLASS_CODE = {"all": -1, "primitive": _kernels.CLASS_PRIMITIVE,
               "semiprimitive": _kernels.CLASS_SEMIPRIMITIVE}


class BudgetExceeded(RuntimeError):
    """The candidate space is larger than the enumeration budget."""

    def __init__(self, candidates: int, budget: int, what: str = ""):
        self.candidates = candidates
        self.budget = budget
        super().__init__(f"{what}: {candidates} candidates exceed budget {budget}")


# -- closed-form counts ------------------------------------------------

def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def type_count(t: PartitionType) -> int:
    """Number of set partitions of type ``t``: ``n! / prod a_l! (l!)^a_l``."""
    return factorial(t.n) // prod(factorial(m) * factorial(s) ** m for s, m in t.multiplicities)


def kreweras_count(n: int, t: PartitionType) -> int:
    """Number of non-crossing partitions of ``[n]`` of type ``t``."""
    if t.n != n:
        raise PartitionError(f"type {t} is not a partition of {n}")
    parts = t.num_parts
    return factorial(n) // (factorial(n + 1 - parts) * prod(factorial(m) for _, m in t.multiplicities))


def integer_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``n`` as non-increasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in integer_partitions(n - k, k):
            yield (k,) + rest


def all_types(n: int, singleton_free: bool = False) -> list[PartitionType]:
    out = [PartitionType.from_sizes(p) for p in integer_partitions(n)]
    if singleton_free:
        out = [t for t in out if not t.multiplicity(1)]
    return sorted(out)


def candidate_count(n: int, type_filter: PartitionType | None = None,
                    singleton_free: bool = False) -> int:
    if type_filter is not None:
        return type_count(type_filter)
    if singleton_free:
        return sum(type_count(t) for t in all_types(n, singleton_free=True))
    return bell(n)


# -- streaming enumeration -----------------------------------------------

def _check_args(n: int, type_filter: PartitionType | None):
    if n < 1:
        raise PartitionError("n must be positive")
    if type_filter is not None and type_filter.n != n:
        raise PartitionError(f"type {type_filter} is not a partition of {n}")


def enumerate_partitions(n: int, type_filter: PartitionType | None = None,
                         singleton_free: bool = False) -> Iterator[Partition]:
    """Yield every qualifying partition of ``[n]`` once, in RGS order.

    Pure Python; meant for streaming and for small ``n``.  The compiled scan
    used by :func:`count_by_genus` visits the same strings in the same order.
    """
    _check_args(n, type_filter)
    if type_filter is not None:
        if singleton_free and type_filter.multiplicity(1):
            return
        tsizes = type_filter.sizes()
        tgt_ge = [sum(1 for s in tsizes if s >= j) for j in range(n + 2)]
    rgs = [0] * n
    size = [0] * (n + 1)
    cnt_ge = [0] * (n + 2)

    def rec(pos, nblocks, singles):
        if pos == n:
            yield Partition.from_rgs(rgs)
            return
        for v in range(nblocks + 1):
            c = size[v]
            if type_filter is not None and cnt_ge[c + 1] + 1 > tgt_ge[c + 1]:
                continue
            ns = singles + (c == 0) - (c == 1)
            if singleton_free and ns > n - pos - 1:
                continue
            size[v] += 1
            cnt_ge[c + 1] += 1
            rgs[pos] = v
            yield from rec(pos + 1, nblocks + (v == nblocks), ns)
            size[v] -= 1
            cnt_ge[c + 1] -= 1

    yield from rec(0, 0, 0)


# -- compiled scans ------------------------------------------------------

@dataclass
class ScanResult:
    """Raw output of a (possibly sharded) compiled scan."""

    n: int
    types: list[PartitionType]
    counts: np.ndarray              # [type, genus, class]
    leaves: int
    matches: list[Partition] = field(default_factory=list)
    matched: int = 0


def _radix(n: int) -> np.ndarray:
    r = np.zeros(n + 1, np.int64)
    w = 1
    for s in range(1, n + 1):
        r[s] = w
        w *= n // s + 1
    if w >= 2**62:
        raise PartitionError(f"n={n} too large for type keys")
    return r


def _type_key(t: PartitionType, radix: np.ndarray) -> int:
    return int(sum(m * int(radix[s]) for s, m in t.multiplicities))


def shard_prefixes(depth: int) -> list[tuple[int, ...]]:
    """All restricted growth strings of length ``depth``."""
    out = [()]
    for _ in range(depth):
        out = [p + (v,) for p in out for v in range((max(p) + 2) if p else 1)]
    return out


def scan(n: int, type_filter: PartitionType | None = None, *, singleton_free: bool = False,
         forbid_adjacent: bool = False, anchor: int = 0, collect_genus: int = -1,
         collect_class: str | None = None, collect: bool = False,
         budget: int = DEFAULT_BUDGET, threads: int = 1, shard_depth: int | None = None) -> ScanResult:
    """Run the compiled scan, optionally sharded over RGS prefixes.

    The budget is checked against the exact size of the candidate space
    before any work starts; exceeding it raises :class:`BudgetExceeded`.
    """
    _check_args(n, type_filter)
    cands = candidate_count(n, type_filter, singleton_free)
    if cands > budget:
        raise BudgetExceeded(cands, budget, f"n={n} type={type_filter}")

    radix = _radix(n)
    if type_filter is None:
        types = all_types(n)
        keys = np.array(sorted(_type_key(t, radix) for t in types), np.int64)
        types = sorted(types, key=lambda t: _type_key(t, radix))
        tgt_ge = np.full(n + 2, -1, np.int64)
    else:
        types = [type_filter]
        keys = np.zeros(1, np.int64)
        sizes = type_filter.sizes()
        tgt_ge = np.array([sum(1 for s in sizes if s >= j) for j in range(n + 2)], np.int64)

    cls_code = _CLASS_CODE[collect_class or "all"]
    if shard_depth is None:
        shard_depth = 0 if threads <= 1 else min(n, 4)
    prefixes = shard_prefixes(min(shard_depth, n))

    def run(prefix, cap):
        counts = np.zeros((len(types), n // 2 + 1, 3), np.int64)
        out = np.zeros((cap, n), np.int64)
        leaves, matched = _kernels.scan(
            n, np.array(prefix, np.int64), tgt_ge, singleton_free, forbid_adjacent, anchor,
            radix, keys, counts, collect_genus if collect else -2, cls_code, out, budget)
        if leaves < 0:
            raise BudgetExceeded(budget + 1, budget, f"n={n} shard {prefix}")
        if collect and matched > cap:
            return run(prefix, matched)
        return counts, leaves, out[: matched if collect else 0], matched

    if threads > 1 and len(prefixes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda p: run(p, 1024 if collect else 0), prefixes))
    else:
        results = [run(p, 1024 if collect else 0) for p in prefixes]

    total = np.zeros((len(types), n // 2 + 1, 3), np.int64)
    leaves = matched = 0
    matches = []
    for counts, lv, rows, m in results:
        total += counts
        leaves += lv
        matched += m
        matches.extend(Partition.from_rgs(r.tolist()) for r in rows)
    return ScanResult(n, types, total, leaves, matches, matched)


# -- genus tables --------------------------------------------------------

@dataclass
class GenusCountTable:
    """Exact counts ``C^{(g)}_{n,[alpha]}`` keyed by ``(type, genus)``.

    Zero entries are not stored.
    """

    n: int
    entries: dict[tuple[PartitionType, int], int]

    def count(self, t: PartitionType, g: int) -> int:
        return self.entries.get((t, g), 0)

    def total(self, t: PartitionType) -> int:
        return sum(c for (tt, _), c in self.entries.items() if tt == t)

    def types(self) -> list[PartitionType]:
        return sorted({t for t, _ in self.entries})

    def by_genus(self, g: int) -> dict[PartitionType, int]:
        return {t: c for (t, gg), c in self.entries.items() if gg == g}

    def grand_total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict:
        rows = [{"type": str(t), "genus": g, "count": c}
                for (t, g), c in sorted(self.entries.items())]
        return {"n": self.n, "counts": rows}

    @classmethod
    def from_json(cls, data: dict | str) -> GenusCountTable:
        if isinstance(data, str):
            data = json.loads(data)
        entries = {(PartitionType.parse(r["type"]), int(r["genus"])): int(r["count"])
                   for r in data["counts"]}
        return cls(int(data["n"]), entries)


def count_by_genus(n: int, type_filter: PartitionType | None = None, *,
                   singleton_free: bool = False, budget: int = DEFAULT_BUDGET,
                   threads: int = 1, shard_depth: int | None = None) -> GenusCountTable:
    res = scan(n, type_filter, singleton_free=singleton_free, budget=budget,
               threads=threads, shard_depth=shard_depth)
    per = res.counts.sum(axis=2)
    entries = {}
    for i, t in enumerate(res.types):
        for g in range(per.shape[1]):
            if per[i, g]:
                entries[(t, g)] = int(per[i, g])
    return GenusCountTable(n, entries)


# -- orbits ----------------------------------------------------------------

@dataclass(frozen=True)
class OrbitRecord:
    """One rotation orbit: canonical representative and stabilizer order."""

    representative: Partition
    stabilizer_order: int

    @property
    def orbit_length(self) -> int:
        return self.representative.n // self.stabilizer_order

    def to_json(self) -> dict:
        return {"representative": self.representative.to_json(),
                "stabilizer_order": self.stabilizer_order,
                "orbit_length": self.orbit_length}


def collect(n: int, t: PartitionType, g: int, class_filter: str = "all", *,
            budget: int = DEFAULT_BUDGET, threads: int = 1) -> list[Partition]:
    """All partitions of type ``t`` and genus ``g`` in the given class."""
    if class_filter not in CLASSES:
        raise ValueError(f"class must be one of {CLASSES}")
    res = scan(n, t, singleton_free=class_filter != "all",
               forbid_adjacent=class_filter != "all", collect=True, collect_genus=g,
               collect_class=class_filter, budget=budget, threads=threads)
    return res.matches


def orbits_of(partitions: list[Partition]) -> list[OrbitRecord]:
    """Group a rotation-closed set of partitions into orbits."""
    pool = set(partitions)
    records = []
    while pool:
        p = min(pool, key=lambda q: q.parts)
        rep = canonical_form(p)
        orbit = {rotate(rep, k) for k in range(rep.n)}
        if not orbit <= pool:
            raise ValueError("partition set is not closed under rotation")
        pool -= orbit
        records.append(OrbitRecord(rep, stabilizer_order(rep)))
    return sorted(records, key=lambda r: r.representative.parts)


def orbit_census(n: int, t: PartitionType, g: int, class_filter: str = "all", *,
                 budget: int = DEFAULT_BUDGET, threads: int = 1) -> list[OrbitRecord]:
    """Rotation orbits of type-``t``, genus-``g`` diagrams in a class.

    The orbit lengths sum to the labeled count.
    """
    return orbits_of(collect(n, t, g, class_filter, budget=budget, threads=threads))


# -- moments ----------------------------------------------------------------

def moment_polynomial(n: int, *, budget: int = DEFAULT_BUDGET) -> KappaPolynomial:
    """``m_n(eps) = sum_alpha eps^{g(alpha)} k_alpha`` over partitions of [n]."""
    table = count_by_genus(n, budget=budget)
    out = KappaPolynomial()
    for (t, g), c in table.entries.items():
        out = out + KappaPolynomial.kappa_monomial(t, c, eps_power=g)
    return out


@dataclass
class SingletonCheck:
    n: int
    r: int
    reduced_type: PartitionType | None
    genus: int
    direct: int
    scaled: int

    @property
    def ok(self) -> bool:
        return self.direct == self.scaled


def singleton_insertion_check(n: int, r: int, t_prime: PartitionType | None, g: int, *,
                              budget: int = DEFAULT_BUDGET) -> SingletonCheck:
    """Compare ``C^{(g)}_{n,[a',1^r]}`` with ``binom(n, r) C^{(g)}_{n-r,[a']}``.

    ``t_prime`` must be singleton free (``None`` for the empty type, r = n).
    """
    if t_prime is not None and t_prime.multiplicity(1):
        raise PartitionError(f"{t_prime} has singletons")
    m = 0 if t_prime is None else t_prime.n
    if m + r != n:
        raise PartitionError(f"type {t_prime} plus {r} singletons is not a type of {n}")
    sizes = ([] if t_prime is None else t_prime.sizes()) + [1] * r
    full = PartitionType.from_sizes(sizes)
    direct = count_by_genus(n, full, budget=budget).count(full, g)
    if t_prime is None:
        base = 1 if g == 0 else 0
    else:
        base = count_by_genus(m, t_prime, budget=budget).count(t_prime, g)
    return SingletonCheck(n, r, t_prime, g, direct, comb(n, r) * base)


__all__ = [
    "BudgetExceeded", "DEFAULT_BUDGET", "GenusCountTable", "OrbitRecord", "ScanResult",
    "SingletonCheck", "all_types", "bell", "candidate_count", "collect", "count_by_genus",
    "enumerate_partitions", "integer_partitions", "kreweras_count", "moment_polynomial",
    "orbit_census", "orbits_of", "scan", "shard_prefixes", "singleton_insertion_check",
    "type_count",
]
