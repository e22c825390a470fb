"""Set partitions counted by genus: enumeration, reduction to primitive
diagrams, and exact generating functions for genus 0, 1 and 2."""

from .enumeration import (BudgetExceeded, GenusCountTable, OrbitRecord, bell, collect,
                          count_by_genus, enumerate_partitions, kreweras_count,
                          moment_polynomial, orbit_census, type_count)
from .gf import (CumulantSpec, Z0, Z1, Z2, dressing, genus2_parts_gf, genus3_doublet_series,
                 singleton_transform)
from .partition import (Partition, PartitionError, PartitionType, Permutation, canonical_form,
                        face_permutation, genus, genus_max, parse_partition, rotate,
                        stabilizer_order, tau_of)
from .poly import KappaPolynomial
from .reduction import (CensusTable, ReductionTrace, census_genus2, confluence_check,
                        is_primitive, is_semiprimitive, reduce)
from .series import TruncatedSeries, compose, pow_rational, reciprocal, solve_fixed_point

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CensusTable",
    "CumulantSpec",
    "GenusCountTable",
    "KappaPolynomial",
    "OrbitRecord",
    "Partition",
    "PartitionError",
    "PartitionType",
    "Permutation",
    "ReductionTrace",
    "TruncatedSeries",
    "Z0",
    "Z1",
    "Z2",
    "bell",
    "canonical_form",
    "census_genus2",
    "collect",
    "compose",
    "confluence_check",
    "count_by_genus",
    "dressing",
    "enumerate_partitions",
    "face_permutation",
    "genus",
    "genus2_parts_gf",
    "genus3_doublet_series",
    "genus_max",
    "is_primitive",
    "is_semiprimitive",
    "kreweras_count",
    "moment_polynomial",
    "orbit_census",
    "parse_partition",
    "pow_rational",
    "reciprocal",
    "reduce",
    "rotate",
    "singleton_transform",
    "solve_fixed_point",
    "stabilizer_order",
    "tau_of",
    "type_count",
]
