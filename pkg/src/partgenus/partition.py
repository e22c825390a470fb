"""Set partitions of [n] as permutation pairs, their genus and rotations.

A partition of ``{1..n}`` is encoded by ``tau``, whose cycles are the parts
traversed in increasing order, together with the long cycle
``sigma = (1, 2, ..., n)``.  The cycles of ``sigma o tau^{-1}`` are the faces
of the associated map and Euler's relation gives the genus::

    2 - 2g = 1 + #parts - n + #faces
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence


class PartitionError(ValueError):
    """Malformed partition text or inconsistent partition data."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{1..n}`` stored as a 1-based image tuple.

    ``images[i - 1]`` is the image of ``i``.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise PartitionError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles, each starting at its smallest element, sorted by it."""
        seen = [False] * (self.n + 1)
        out = []
        for i in range(1, self.n + 1):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def num_cycles(self) -> int:
        return len(self.cycles())

    def __str__(self):
        return "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles())


@dataclass(frozen=True, order=True)
class PartitionType:
    """Multiset of part sizes, e.g. ``[1^2 3 5]``.

    Stored as sorted ``(size, multiplicity)`` pairs with multiplicity >= 1.
    """

    multiplicities: tuple[tuple[int, int], ...]

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> PartitionType:
        counts = Counter(sizes)
        if any(s < 1 for s in counts):
            raise PartitionError("part sizes must be positive")
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def parse(cls, text: str) -> PartitionType:
        """Parse ``[1^2 3 5]``, ``1^2 3 5``, ``2^4`` or ``2^2.3``."""
        body = text.strip().strip("[]").replace(",", " ").replace(".", " ")
        body = body.replace("·", " ").replace("*", " ")
        if not body.strip():
            raise PartitionError(f"empty type: {text!r}")
        sizes = []
        for tok in body.split():
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise PartitionError(f"bad type factor {tok!r} in {text!r}")
            size, mult = int(m.group(1)), int(m.group(2) or 1)
            if size < 1 or mult < 1:
                raise PartitionError(f"bad type factor {tok!r} in {text!r}")
            sizes.extend([size] * mult)
        return cls.from_sizes(sizes)

    @property
    def n(self) -> int:
        return sum(s * m for s, m in self.multiplicities)

    @property
    def num_parts(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def multiplicity(self, size: int) -> int:
        return dict(self.multiplicities).get(size, 0)

    def sizes(self) -> list[int]:
        """Part sizes in non-increasing order."""
        return [s for s, m in reversed(self.multiplicities) for _ in range(m)]

    def without_singletons(self) -> PartitionType | None:
        rest = tuple((s, m) for s, m in self.multiplicities if s != 1)
        return PartitionType(rest) if rest else None

    def __str__(self):
        factors = [str(s) if m == 1 else f"{s}^{m}" for s, m in self.multiplicities]
        return "[" + " ".join(factors) + "]"


@dataclass(frozen=True)
class Partition:
    """A set partition of ``{1..n}``.

    Parts are normalized on construction: elements increase inside a part and
    parts are ordered by their smallest element, so equality and hashing
    ignore the order in which parts were given.  ``n == 0`` denotes the empty
    diagram left over when a reduction erases everything.
    """

    n: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(sorted(tuple(sorted(p)) for p in self.parts))
        object.__setattr__(self, "parts", parts)
        seen = set()
        for p in parts:
            if not p:
                raise PartitionError("empty part")
            for e in p:
                if e < 1:
                    raise PartitionError(f"non-positive element {e}")
                if e > self.n:
                    raise PartitionError(f"element {e} exceeds n={self.n}")
                if e in seen:
                    raise PartitionError(f"duplicate element {e}")
                seen.add(e)
        if len(seen) != self.n:
            missing = sorted(set(range(1, self.n + 1)) - seen)
            raise PartitionError(f"missing elements {missing}")

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int]], n: int | None = None) -> Partition:
        parts = [tuple(p) for p in parts]
        if n is None:
            n = max((max(p) for p in parts if p), default=0)
        return cls(n, tuple(parts))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> Partition:
        """Build from a 0-based restricted growth string."""
        blocks: dict[int, list[int]] = {}
        for i, b in enumerate(rgs, 1):
            blocks.setdefault(int(b), []).append(i)
        return cls(len(rgs), tuple(tuple(v) for v in blocks.values()))

    @classmethod
    def empty(cls) -> Partition:
        return cls(0, ())

    @cached_property
    def type(self) -> PartitionType:
        return PartitionType.from_sizes(len(p) for p in self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def block_of(self) -> dict[int, int]:
        """Map element -> index of its part."""
        return {e: k for k, p in enumerate(self.parts) for e in p}

    def to_json(self) -> dict:
        return {"n": self.n, "parts": [list(p) for p in self.parts]}

    @classmethod
    def from_json(cls, data: dict | str) -> Partition:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple(tuple(p) for p in data["parts"]))

    def __str__(self):
        return "|".join(",".join(map(str, p)) for p in self.parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"1,3,4,6,7|2,5,9|8|10"`` into a partition of ``[max]``."""
    text = text.strip()
    if not text:
        raise PartitionError("empty partition text")
    parts = []
    for k, chunk in enumerate(text.split("|")):
        chunk = chunk.strip()
        if not chunk:
            raise PartitionError(f"empty part at position {k}")
        part = []
        for tok in chunk.split(","):
            tok = tok.strip()
            try:
                part.append(int(tok))
            except ValueError:
                raise PartitionError(f"bad element {tok!r} in part {k}") from None
        parts.append(tuple(part))
    flat = [e for p in parts for e in p]
    if min(flat) < 1:
        raise PartitionError(f"non-positive element {min(flat)}")
    dup = [e for e, c in Counter(flat).items() if c > 1]
    if dup:
        raise PartitionError(f"duplicate element {min(dup)}")
    return Partition(max(flat), tuple(parts))


def tau_of(p: Partition) -> Permutation:
    """Permutation whose cycles are the parts, each read increasingly."""
    images = list(range(1, p.n + 1))
    for part in p.parts:
        for a, b in zip(part, part[1:] + part[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))


def sigma(n: int) -> Permutation:
    return Permutation(tuple(list(range(2, n + 1)) + [1]) if n else ())


def face_permutation(p: Partition) -> Permutation:
    """``sigma o tau^{-1}``; its cycles bound the faces of the map."""
    return sigma(p.n).compose(tau_of(p).inverse())


def genus(p: Partition) -> int:
    if p.n == 0:
        return 0
    twice = p.n + 1 - p.num_parts - face_permutation(p).num_cycles()
    if twice % 2 or twice < 0:
        raise ArithmeticError(f"Euler count failed for {p}: 2g = {twice}")
    return twice // 2


def genus_max(n: int, t: PartitionType) -> int:
    if t.n != n:
        raise PartitionError(f"type {t} is not a partition of {n}")
    return (n - t.num_parts) // 2


def rotate(p: Partition, k: int) -> Partition:
    """Relabel every element ``i`` as ``((i - 1 + k) mod n) + 1``."""
    if p.n == 0:
        return p
    return Partition(p.n, tuple(tuple((e - 1 + k) % p.n + 1 for e in part) for part in p.parts))


def rotations(p: Partition) -> list[Partition]:
    return [rotate(p, k) for k in range(max(p.n, 1))]


def canonical_form(p: Partition) -> Partition:
    """Lexicographically smallest rotation (parts compared as lists)."""
    return min(rotations(p), key=lambda q: q.parts)


def rotation_period(p: Partition) -> int:
    """Smallest ``k > 0`` with ``rotate(p, k) == p``: the orbit length."""
    for k in range(1, p.n + 1):
        if p.n % k == 0 and rotate(p, k) == p:
            return k
    return 1


def stabilizer_order(p: Partition) -> int:
    """Order of the subgroup of rotations fixing ``p``; orbit length is ``n / s``."""
    if p.n == 0:
        return 1
    return p.n // rotation_period(p)
