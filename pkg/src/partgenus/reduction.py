"""Genus-preserving reductions down to (semi-)primitive diagrams.

Four moves shrink a diagram without changing its genus:

1. delete a singleton part;
2. delete a centipede, a part whose points are cyclically consecutive;
3. collapse a run of cyclically consecutive points of one part to a single
   point, keeping point 1 if the run holds it, otherwise the run's first
   point clockwise from 1 (Convention 1);
4. delete a 2-part parallel to another part, i.e. incident to a 2-cycle of
   ``sigma o tau^{-1}``; between two parallel 2-parts the one touching the
   smallest label survives (Convention 2).

After every deletion the surviving points keep their cyclic order and are
renumbered ``1..n'`` in increasing order of their old labels.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import _kernels
from .enumeration import scan
from .partition import Partition, PartitionType, canonical_form, face_permutation, genus

KINDS = ("remove_singleton", "remove_centipede", "remove_adjacent_edge", "remove_parallel_line")


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    detail: tuple[int, ...]        # deleted points, labels of ``before``
    before: Partition
    after: Partition

    @property
    def before_n(self) -> int:
        return self.before.n

    @property
    def after_n(self) -> int:
        return self.after.n

    def to_json(self) -> dict:
        return {"kind": self.kind, "deleted": list(self.detail),
                "before_n": self.before_n, "after_n": self.after_n,
                "after": str(self.after)}


@dataclass
class ReductionTrace:
    input: Partition
    steps: list[ReductionStep] = field(default_factory=list)
    result: Partition | None = None
    classification: str = "empty"

    def replay(self) -> Partition:
        p = self.input
        for s in self.steps:
            p = delete_points(p, s.detail)
        return p

    def to_json(self) -> dict:
        return {"input": str(self.input), "steps": [s.to_json() for s in self.steps],
                "result": self.result.to_json(), "classification": self.classification}


def delete_points(p: Partition, points) -> Partition:
    """Remove points, drop emptied parts, renumber survivors in order."""
    gone = set(points)
    survivors = [i for i in range(1, p.n + 1) if i not in gone]
    relabel = {old: new for new, old in enumerate(survivors, 1)}
    parts = [tuple(relabel[e] for e in part if e not in gone) for part in p.parts]
    return Partition(len(survivors), tuple(q for q in parts if q))


def _is_consecutive(part: tuple[int, ...], n: int) -> bool:
    """Whether the part occupies a cyclic interval of ``1..n``."""
    k = len(part)
    if k == n:
        return True
    gaps = sum(1 for a, b in zip(part, part[1:] + (part[0] + n,)) if b - a > 1)
    return gaps == 1


def _runs(part: tuple[int, ...], n: int) -> list[list[int]]:
    """Maximal runs of cyclically consecutive points, in clockwise order."""
    if len(part) == n:
        return [list(part)]
    members = set(part)
    runs = []
    for e in part:
        before = e - 1 if e > 1 else n
        if before in members:
            continue
        run = [e]
        nxt = e % n + 1
        while nxt in members:
            run.append(nxt)
            nxt = nxt % n + 1
        runs.append(run)
    return runs


def _run_keeper(run: list[int]) -> int:
    # Convention 1: the point 1 itself, else the first point met clockwise from 1
    return 1 if 1 in run else min(run)


def _two_cycles(p: Partition) -> list[tuple[int, int]]:
    return [c for c in face_permutation(p).cycles() if len(c) == 2]


def _parallel_victim(p: Partition, cycle: tuple[int, int], block) -> tuple[int, ...] | None:
    """The 2-part a parallel-line move deletes for this 2-cycle, if any."""
    a, b = cycle
    n = p.n
    pa = p.parts[block[a]]     # holds b-1 -> a
    pb = p.parts[block[b]]     # holds a-1 -> b
    small = [q for q in (pa, pb) if len(q) == 2]
    if not small:
        return None
    if len(small) == 1 or pa == pb:
        return small[0]
    ends = {a, b, (a - 2) % n + 1, (b - 2) % n + 1}
    lowest = min(ends)
    # Convention 2: keep the 2-line touching the smallest label
    return pb if lowest in pa else pa


# -- atomic moves ------------------------------------------------------------

def applicable_moves(p: Partition) -> list[tuple[str, tuple[int, ...]]]:
    """Every single deletion one of the four moves allows right now."""
    moves = []
    if p.n == 0:
        return moves
    for part in p.parts:
        if len(part) == 1:
            moves.append(("remove_singleton", part))
        elif _is_consecutive(part, p.n):
            moves.append(("remove_centipede", part))
    for part in p.parts:
        if len(part) < 2:
            continue
        for run in _runs(part, p.n):
            keep = _run_keeper(run)
            moves.extend(("remove_adjacent_edge", (e,)) for e in run if e != keep)
    block = p.block_of()
    victims = set()
    for cyc in _two_cycles(p):
        v = _parallel_victim(p, cyc, block)
        if v is not None and v not in victims:
            victims.add(v)
            moves.append(("remove_parallel_line", v))
    return moves


def _step(p: Partition, kind: str, points) -> ReductionStep:
    points = tuple(sorted(points))
    return ReductionStep(kind, points, p, delete_points(p, points))


# -- the four moves applied exhaustively --------------------------------------

def _singleton_steps(p):
    pts = [part[0] for part in p.parts if len(part) == 1]
    return [_step(p, "remove_singleton", pts)] if pts else []


def _centipede_steps(p):
    steps = []
    while p.n:
        pts = [e for part in p.parts if len(part) > 1 and _is_consecutive(part, p.n) for e in part]
        if not pts:
            break
        steps.append(_step(p, "remove_centipede", pts))
        p = steps[-1].after
    return steps


def _adjacent_steps(p):
    steps = []
    while p.n:
        pts = [e for part in p.parts if len(part) > 1
               for run in _runs(part, p.n) for e in run if e != _run_keeper(run)]
        if not pts:
            break
        steps.append(_step(p, "remove_adjacent_edge", pts))
        p = steps[-1].after
    return steps


def _parallel_steps(p):
    steps = []
    while p.n:
        block = p.block_of()
        victim = None
        for cyc in _two_cycles(p):
            victim = _parallel_victim(p, cyc, block)
            if victim is not None:
                break
        if victim is None:
            break
        steps.append(_step(p, "remove_parallel_line", victim))
        p = steps[-1].after
    return steps


def _final(p, steps):
    return steps[-1].after if steps else p


def remove_singletons(p: Partition) -> Partition:
    return _final(p, _singleton_steps(p))


def remove_centipedes(p: Partition) -> Partition:
    return _final(p, _centipede_steps(p))


def remove_adjacent_edges(p: Partition) -> Partition:
    return _final(p, _adjacent_steps(p))


def remove_parallel_lines(p: Partition) -> Partition:
    return _final(p, _parallel_steps(p))


# -- classification -----------------------------------------------------------

def _face_profile(p: Partition):
    cycles = face_permutation(p).cycles()
    return [c for c in cycles if len(c) == 1], [c for c in cycles if len(c) == 2]


def is_primitive(p: Partition) -> bool:
    """No singleton part and no face of length 1 or 2."""
    if p.n == 0 or any(len(q) == 1 for q in p.parts):
        return False
    ones, twos = _face_profile(p)
    return not ones and not twos


def is_semiprimitive(p: Partition) -> bool:
    """No singleton, no 1-face, and every 2-face joins two parts of size > 2."""
    if p.n == 0 or any(len(q) == 1 for q in p.parts):
        return False
    ones, twos = _face_profile(p)
    if ones or not twos:
        return False
    block = p.block_of()
    return all(len(p.parts[block[a]]) > 2 and len(p.parts[block[b]]) > 2 for a, b in twos)


def classify(p: Partition) -> str:
    if p.n == 0:
        return "empty"
    if is_primitive(p):
        return "primitive"
    if is_semiprimitive(p):
        return "semiprimitive"
    return "reducible"


def reduce(p: Partition, check_genus: bool = False) -> ReductionTrace:
    """Apply the moves in the fixed order singletons, centipedes, adjacent
    edges, parallel lines, and start over until nothing changes."""
    trace = ReductionTrace(p)
    cur = p
    while True:
        progressed = False
        for stage in (_singleton_steps, _centipede_steps, _adjacent_steps, _parallel_steps):
            steps = stage(cur)
            if steps:
                trace.steps.extend(steps)
                cur = steps[-1].after
                progressed = True
        if not progressed:
            break
    if check_genus:
        g = genus(p)
        for s in trace.steps:
            if genus(s.after) != g:
                raise AssertionError(f"{s.kind} changed the genus: {s.before} -> {s.after}")
    trace.result = cur
    trace.classification = classify(cur)
    return trace


def random_reduction(p: Partition, rng: random.Random) -> Partition:
    """Reduce by applying one randomly chosen atomic move at a time."""
    while True:
        moves = applicable_moves(p)
        if not moves:
            return p
        _, pts = rng.choice(moves)
        p = delete_points(p, pts)


def confluence_check(p: Partition, trials: int = 50, seed: int = 0,
                     up_to_rotation: bool = False) -> bool:
    """Whether random move orders all end at the deterministic result.

    A parallel-line move may delete the marked point 1, after which the
    relabeling starts elsewhere; ``up_to_rotation`` compares the results as
    unlabeled diagrams instead.
    """
    rng = random.Random(seed)
    key = canonical_form if up_to_rotation else (lambda q: q)
    target = key(reduce(p).result)
    return all(key(random_reduction(p, rng)) == target for _ in range(trials))


# -- genus-2 census -----------------------------------------------------------

CENSUS_COLUMNS = ("two_vertices_only", "one_3vertex", "two_3vertices_prim",
                  "two_3vertices_semiprim", "one_4vertex")
CENSUS_HEADERS = ("2-vertices", "one 3-vertex", "two 3-vertices", "two 3-v. semi-prim.",
                  "one 4-vertex")


def census_type(n: int, column: str) -> PartitionType | None:
    """The type a census cell ranges over, or ``None`` if parity forbids it."""
    extra = {"two_vertices_only": [], "one_3vertex": [3], "two_3vertices_prim": [3, 3],
             "two_3vertices_semiprim": [3, 3], "one_4vertex": [4]}[column]
    rest = n - sum(extra)
    if rest < 0 or rest % 2:
        return None
    sizes = extra + [2] * (rest // 2)
    return PartitionType.from_sizes(sizes) if sizes else None


@dataclass
class CensusTable:
    genus: int
    rows: dict[tuple[int, str], int]

    def ns(self) -> list[int]:
        return sorted({n for n, _ in self.rows})

    def to_text(self) -> str:
        width = [max(len(h), 6) for h in CENSUS_HEADERS]
        lines = ["  n | " + " | ".join(h.rjust(w) for h, w in zip(CENSUS_HEADERS, width))]
        lines.append("-" * len(lines[0]))
        for n in self.ns():
            cells = [str(self.rows.get((n, c), 0)).rjust(w) for c, w in zip(CENSUS_COLUMNS, width)]
            lines.append(f"{n:>3} | " + " | ".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"genus": self.genus,
                "rows": [{"n": n, **{c: self.rows.get((n, c), 0) for c in CENSUS_COLUMNS}}
                         for n in self.ns()]}


def census_cell_counts(n: int, t: PartitionType, g: int = 2, *, budget: int = 10**10,
                       threads: int = 1) -> dict[str, int]:
    """Labeled counts of genus-``g`` primitive and semi-primitive partitions of type ``t``.

    Only strings with no two cyclically adjacent points in one part are
    visited.  When the type has a part size other than 2, point 1 is pinned
    to a part of that size ``s``; since genus and class are rotation
    invariant, the labeled count is ``n / (s * a_s)`` times the pinned count.
    """
    others = [s for s, _ in t.multiplicities if s != 2]
    anchor = max(others) if others else 0
    res = scan(n, t, singleton_free=True, forbid_adjacent=True, anchor=anchor,
               budget=budget, threads=threads)
    out = {}
    for name, cls in (("primitive", _kernels.CLASS_PRIMITIVE),
                      ("semiprimitive", _kernels.CLASS_SEMIPRIMITIVE)):
        pinned = int(res.counts[0, g, cls]) if g < res.counts.shape[1] else 0
        if anchor:
            num, den = pinned * n, anchor * t.multiplicity(anchor)
            if num % den:
                raise ArithmeticError(f"rotation weighting not integral for {t}")
            out[name] = num // den
        else:
            out[name] = pinned
    return out


def census_genus2(ns=range(6, 19), *, budget: int = 10**10, threads: int = 1,
                  progress=None) -> CensusTable:
    """Labeled counts of genus-2 (semi-)primitive partitions per column of the table."""
    rows = {}
    for n in ns:
        cache = {}
        for col in CENSUS_COLUMNS:
            t = census_type(n, col)
            if t is None:
                rows[(n, col)] = 0
                continue
            if t not in cache:
                cache[t] = census_cell_counts(n, t, 2, budget=budget, threads=threads)
            semi = col == "two_3vertices_semiprim"
            rows[(n, col)] = cache[t]["semiprimitive" if semi else "primitive"]
            if progress:
                progress(n, col, rows[(n, col)])
    return CensusTable(2, rows)


__all__ = [
    "CENSUS_COLUMNS", "CensusTable", "ReductionStep", "ReductionTrace", "applicable_moves",
    "census_cell_counts", "census_genus2", "census_type", "classify", "confluence_check",
    "delete_points", "is_primitive", "is_semiprimitive", "random_reduction", "reduce",
    "remove_adjacent_edges", "remove_centipedes", "remove_parallel_lines", "remove_singletons",
]
