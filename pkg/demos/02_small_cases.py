"""Numbers with at most six digits use explicit case tables; list a few per base."""

from collections import Counter

from palsum.small import small_parts

for n, g in [(7, 10), (21, 10), (201, 10), (1000, 10), (120031, 10), (3124, 5)]:
    parts, case = small_parts(n, g)
    print(f"n = {n} (base {g}): {' + '.join(map(str, parts))}  [{case.branch}]")

# how often each table row is used over all numbers below 5**6
usage = Counter(small_parts(n, 5)[1].branch for n in range(1, 5**6))
print("\nmost used rows in base 5:")
for branch, count in usage.most_common(8):
    print(f"  {branch:<22} {count}")
print(f"{len(usage)} distinct rows used")
