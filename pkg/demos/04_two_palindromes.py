"""Three summands are needed: a family of numbers that two palindromes miss,
and how common sums of two palindromes are."""

from palsum import count_two_sums, family_members, render
from palsum.oracle import brute_two_int

g = 10
members = list(family_members(6, g))
print(f"{len(members)} six-digit members of the family 99xx09, e.g.")
for ds in members[:3] + members[-2:]:
    v = int(ds)
    print(f"  {render(ds, g)}: two palindromes? {brute_two_int(v, g) is not None}")

for limit in (10**3, 10**4, 10**5):
    c = count_two_sums(limit, g)
    print(f"n <= {limit}: {c} are sums of two palindromes ({c / limit:.1%})")
