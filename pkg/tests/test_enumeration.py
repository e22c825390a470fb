from collections import Counter
from math import factorial

import pytest

from partgenus.enumeration import (BudgetExceeded, GenusCountTable, all_types, bell,
                                   candidate_count, collect, count_by_genus,
                                   enumerate_partitions, kreweras_count, moment_polynomial,
                                   orbit_census, scan, singleton_insertion_check, type_count)
from partgenus.partition import Partition, PartitionType, genus, genus_max
from partgenus.poly import KappaPolynomial
from partgenus.published import moment_polynomials

T = PartitionType.parse


def set_partitions(elements):
    """Independent generator: place the first element with each sub-partition block."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for sub in set_partitions(rest):
        yield [[first]] + sub
        for i in range(len(sub)):
            yield sub[:i] + [[first] + sub[i]] + sub[i + 1:]


def harer_zagier(g, p):
    """Genus-g pairings of 2p points: (p+1)e_g(p) = 2(2p-1)e_g(p-1) + (p-1)(2p-1)(2p-3)e_{g-1}(p-2)."""
    if g < 0 or p < 0:
        return 0
    if p == 0:
        return 1 if g == 0 else 0
    num = 2 * (2 * p - 1) * harer_zagier(g, p - 1)
    if p >= 2:
        num += (p - 1) * (2 * p - 1) * (2 * p - 3) * harer_zagier(g - 1, p - 2)
    assert num % (p + 1) == 0
    return num // (p + 1)


def test_bell_and_counts():
    assert [bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    assert len(list(enumerate_partitions(3))) == 5


def test_pairs_of_four():
    got = set(enumerate_partitions(4, T("2^2")))
    want = {Partition.from_parts(p) for p in ([[1, 2], [3, 4]], [[1, 4], [2, 3]], [[1, 3], [2, 4]])}
    assert got == want


@pytest.mark.parametrize("n", range(1, 9))
def test_generator_matches_independent_enumeration(n):
    ours = set(enumerate_partitions(n))
    theirs = {Partition.from_parts(p) for p in set_partitions(list(range(1, n + 1)))}
    assert ours == theirs and len(ours) == bell(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_kernel_matches_python(n):
    table = count_by_genus(n)
    ref = Counter((p.type, genus(p)) for p in enumerate_partitions(n))
    assert table.entries == dict(ref)


def test_type_filter_and_singleton_free():
    for t in all_types(7):
        parts = list(enumerate_partitions(7, t))
        assert len(parts) == type_count(t) == candidate_count(7, t)
        assert all(p.type == t for p in parts)
    sf = list(enumerate_partitions(7, singleton_free=True))
    assert sf and all(1 not in [len(q) for q in p.parts] for p in sf)
    assert len(sf) == sum(type_count(t) for t in all_types(7, singleton_free=True))


@pytest.mark.parametrize("n", range(1, 11))
def test_sum_over_genus_and_bell(n):
    table = count_by_genus(n)
    assert table.grand_total() == bell(n)
    for t in all_types(n):
        assert table.total(t) == type_count(t)
        assert all(table.count(t, g) == 0 for g in range(genus_max(n, t) + 1, n))


@pytest.mark.parametrize("n", range(1, 11))
def test_kreweras(n):
    table = count_by_genus(n)
    for t in all_types(n):
        assert table.count(t, 0) == kreweras_count(n, t)


def test_kreweras_examples():
    assert kreweras_count(4, T("2^2")) == 2
    assert kreweras_count(5, T("1 2^2")) == 10
    assert kreweras_count(6, T("6")) == 1


def test_small_tables():
    t4 = count_by_genus(4)
    assert t4.count(T("2^2"), 0) == 2 and t4.count(T("2^2"), 1) == 1
    t5 = count_by_genus(5)
    assert (t5.count(T("2 3"), 0), t5.count(T("2 3"), 1)) == (5, 5)
    assert (t5.count(T("1 2^2"), 0), t5.count(T("1 2^2"), 1)) == (10, 5)
    assert count_by_genus(6, T("3^2")).count(T("3^2"), 2) == 1


@pytest.mark.parametrize("p", range(1, 8))
def test_pairings_match_harer_zagier(p):
    t = T(f"2^{p}")
    table = count_by_genus(2 * p, t)
    for g in range(p // 2 + 1):
        assert table.count(t, g) == harer_zagier(g, p)


def test_table_json_roundtrip():
    table = count_by_genus(6)
    again = GenusCountTable.from_json(table.to_json())
    assert again.entries == table.entries and again.n == 6


def test_sharded_scan_agrees():
    one = scan(9, None, threads=1)
    many = scan(9, None, threads=2, shard_depth=3)
    assert (one.counts == many.counts).all() and one.leaves == many.leaves == bell(9)


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        count_by_genus(12, budget=1000)


def test_collect_genus2_pairs_of_eight():
    got = collect(8, T("2^4"), 2)
    assert len(got) == 21 and all(genus(p) == 2 for p in got)


@pytest.mark.parametrize("n,t,g,cls,weight,orbits", [
    (8, "2^4", 2, "primitive", 21, 4),
    (7, "2^2 3", 2, "primitive", 14, 2),
    (8, "2 3^2", 2, "primitive", 20, None),
    (10, "2^2 3^2", 2, "semiprimitive", 15, 3),
    (6, "3^2", 2, "all", 1, 1),
    (8, "2^2 4", 2, "primitive", 6, None),
])
def test_orbit_weights(n, t, g, cls, weight, orbits):
    recs = orbit_census(n, T(t), g, cls)
    assert sum(r.orbit_length for r in recs) == weight
    # sum of 1/s equals labeled count / n
    from fractions import Fraction
    assert sum(Fraction(1, r.stabilizer_order) for r in recs) == Fraction(weight, n)
    if orbits is not None:
        assert len(recs) == orbits


def test_pairs_of_eight_stabilizers():
    recs = orbit_census(8, T("2^4"), 2, "primitive")
    assert sorted(r.stabilizer_order for r in recs) == [1, 1, 2, 8]


def test_moment_polynomials_match_printed():
    printed = moment_polynomials()
    for n in range(1, 6):
        assert moment_polynomial(n) == printed[n]
    m4 = moment_polynomial(4)
    assert m4.coefficient({0: 1, 3: 2}) == 1     # eps * k2^2


def test_moment_polynomial_at_eps_one_counts_all():
    for n in range(1, 8):
        m = moment_polynomial(n)
        ones = {v: 1 for v in m.variables()}
        assert m.subs(ones) == bell(n)


@pytest.mark.parametrize("n,r,tp,g,value", [
    (5, 1, "2^2", 1, 5),
    (5, 3, "2", 0, 10),
    (8, 2, "2^3", 1, None),
    (9, 3, "3^2", 2, None),
])
def test_singleton_insertion(n, r, tp, g, value):
    chk = singleton_insertion_check(n, r, T(tp), g)
    assert chk.ok
    if value is not None:
        assert chk.direct == value


def test_singleton_insertion_r0():
    assert singleton_insertion_check(6, 0, T("2^3"), 1).ok


def test_type_count_formula():
    t = T("1^2 3 5")
    assert type_count(t) == factorial(10) // (factorial(2) * 1 * 6 * 120)


def test_moment_polynomial_type():
    assert isinstance(moment_polynomial(3), KappaPolynomial)
