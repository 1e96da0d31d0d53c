"""Decompose the four classic decimal examples and show how each was built."""

from palsum import classify, decompose, parse, render, seed, verify

EXAMPLES = {
    "digits of pi": "314159265358979323846",
    "digits of e": "2718281828459045235360",
    "digits of zeta(3)": "120205690315959428539",
    "Fibonacci-factorial": "12267420107203532444",
}

for name, text in EXAMPLES.items():
    n = parse(text, 10)
    tag = classify(n)
    s = seed(tag, n)
    d = decompose(n, trace=True)
    prov = d.provenance
    print(f"{name}: n = {text}")
    print(f"  type {tag.value}, seed digits ({s.x1}, {s.y1}, {s.z1})")
    for i, p in enumerate(d.parts, 1):
        print(f"  p{i} = {render(p, 10):>24}")
    print(f"  algorithm {prov.algorithm}, adjustment {prov.adjustment}, verified {verify(d)}")
    if prov.trace and "k" in prov.trace:
        print(f"  shifted by k = {prov.trace['k']}, then algorithm {prov.trace['inner_algorithm']}")
    print()
