"""Genus of one partition of [10], step by step."""

from partgenus.partition import face_permutation, genus, genus_max, parse_partition, sigma, tau_of

p = parse_partition("1,3,4,6,7|2,5,9|8|10")
tau, phi = tau_of(p), face_permutation(p)
print("partition      ", p)
print("tau (parts)    ", tau)
print("sigma          ", sigma(p.n))
print("faces          ", phi)
parts, faces = len(p.parts), len(phi.cycles())
print(f"2g = n + 1 - parts - faces = {p.n} + 1 - {parts} - {faces} = {2 * genus(p)}")
print("genus", genus(p), "of at most", genus_max(p.n, p.type))
