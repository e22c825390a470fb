"""The genus-2 census of primitive diagrams for n <= 14 (the full table takes minutes)."""

from partgenus.reduction import census_genus2

print(census_genus2(range(6, 15)).to_text())
