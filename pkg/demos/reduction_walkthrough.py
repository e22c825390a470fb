"""Reduce a few partitions to their primitive diagrams and show every move."""

import random

from partgenus.partition import genus, parse_partition
from partgenus.reduction import confluence_check, random_reduction, reduce

for text in ("1,3,4,6,7|2,5|8,9,10", "1,3,4,6,7|2,5,9|8|10", "1,2|3,6|4,5"):
    tr = reduce(parse_partition(text), check_genus=True)
    print(f"{text}  (genus {genus(tr.input)})")
    for s in tr.steps:
        print(f"  {s.kind:<22} n {s.before_n:>2} -> {s.after_n:<2} {s.after}")
    print(f"  => {tr.result or '(empty)'}  [{tr.classification}]\n")

p = parse_partition("1,2,3,9|4,7,12,13|5,8|6|10,11,14")
rng = random.Random(0)
print("random move orders for", p)
print("  deterministic:", reduce(p).result)
print("  random:       ", sorted({str(random_reduction(p, rng)) for _ in range(40)}))
print("  confluent as labeled partitions:", confluence_check(p, trials=40))
print("  confluent up to rotation:       ", confluence_check(p, trials=40, up_to_rotation=True))
