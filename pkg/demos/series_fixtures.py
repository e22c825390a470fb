"""Expand the genus series for a few cumulant choices and compare with enumeration."""

from partgenus.enumeration import count_by_genus
from partgenus.gf import CumulantSpec, Z0, Z1, Z2
from partgenus.partition import PartitionType

for mode in ("doublets", "triplets", "all_ones"):
    spec = CumulantSpec(mode)
    for g, fn in enumerate((Z0, Z1, Z2)):
        z = fn(spec, 15)
        terms = [f"{c}x^{k}" for k, c in enumerate(z.coeffs) if c]
        print(f"{mode:<9} g={g}: " + " + ".join(terms[:6]) + (" + ..." if len(terms) > 6 else ""))

# one coefficient of the symbolic series against a type-restricted count
t = PartitionType.parse("2^3 3^2")
z2 = Z2(CumulantSpec("symbolic"), t.n)[t.n]
print(f"\ngenus 2, type {t}: series gives {z2.coefficient({k + 1: m for k, m in t.multiplicities})}, "
      f"enumeration gives {count_by_genus(t.n, t).count(t, 2)}")
