"""Even-length numbers with a zero next to the centre are shifted first.

The shift subtracts k * (g**m + g**(m-1)), decomposes the result and adds k
back to the two central digits of the first palindrome.
"""

from palsum import DigitString, render, run_V

for n, g in [(12267420107203532444, 10), (10400000, 10), (87628, 5)]:
    ds = DigitString.from_int(n, g)
    cfg = run_V(ds)
    red = cfg.reduction
    print(f"n = {render(ds, g)} (base {g})")
    print(f"  k = {red.k}, n' = {render(red.n_prime, g)} ({red.reduced_case}, type {red.inner_type.value})")
    print(f"  parts: {', '.join(render(p, g) for p in cfg.parts)}  [{cfg.adjustment}]")
