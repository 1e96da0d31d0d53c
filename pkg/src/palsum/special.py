"""Numbers with a zero next to the centre of an even-length p1.

Such an n is shifted down by k*s with s = g**m + g**(m-1) so that both
central digits become nonzero, decomposed with algorithm II or IV, and the
first palindrome then gets k added to its two central digits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import Seed, TypeTag, seed_values, special_flag, classify, type_of
from .construct import ConstructionError, ThreeConfig, build, verify_config
from .digits import DigitString, from_digits, to_digits

SAME_LENGTH = "same_length"
SHRUNK_104 = "shrunk_104"


@dataclass(frozen=True)
class SpecialReduction:
    k: int
    s: DigitString
    n_prime: DigitString
    reduced_case: str
    inner_type: TypeTag
    inner_algorithm: str


def reduce_digits(d, g, m):
    """Smallest k in (1, 2) making both central digits of n - k*s nonzero."""
    n = from_digits(d, g)
    s = g**m + g ** (m - 1)
    for k in (1, 2):
        dp = to_digits(n - k * s, g)
        if len(dp) > m and dp[m - 1] and dp[m]:
            return k, dp
    raise ConstructionError(f"no k in (1, 2) normalises {d[::-1]} in base {g}")


def plan_reduced(dp, g, m):
    """Type, seed values and algorithm for the shifted number.

    Normally p1' keeps its 2m digits.  When it loses one (n = 104... became
    103..., or n = 103...3 became 102...3, now an A5/A6 number) the B1/B2
    starting digits are used instead, which keeps p1' at length 2m.
    """
    label = type_of(dp, g)
    x1, y1, z1, len1, _, _ = seed_values(label, dp, g)
    if len1 == 2 * m:
        return label, (x1, y1, z1), ("II" if label[0] == "A" else "IV"), SAME_LENGTH
    if len1 == 2 * m - 1:
        l = len(dp)
        if not (l == 2 * m and dp[l - 1] == 1 and dp[l - 2] == 0 and dp[l - 3] in (2, 3)):
            raise ConstructionError(f"unexpected shortening of p1 for {dp[::-1]}")
        label = "B1" if (dp[0] - dp[l - 3]) % g else "B2"
        x1, y1, z1, _, _, _ = seed_values(label, dp, g)
        if y1 == 0:
            raise ConstructionError(f"B2 start for {dp[::-1]} gives an empty p2")
        return label, (x1, y1, z1), "IV", SHRUNK_104
    raise ConstructionError(f"p1 length {len1} for shifted number, expected {2 * m}")


def special_rows(d, g, m, trace=False):
    """Decompose a special number given as little-endian digits.

    Returns ``(rows, k, dp, inner_label, inner_algorithm, reduced_case, case, state)``.
    """
    k, dp = reduce_digits(d, g, m)
    label, (x1, y1, z1), alg, rcase = plan_reduced(dp, g, m)
    rows, case, state = build(alg, dp, g, x1, y1, z1, m, trace=trace)
    p1 = rows[0]
    if len(p1) != 2 * m:
        raise ConstructionError(f"inner p1 has {len(p1)} digits, expected {2 * m}")
    lo, hi = m - 1, m
    if p1[lo] + k >= g:
        raise ConstructionError(f"central digit {p1[lo]} + {k} overflows base {g} after {case}")
    p1[lo] += k
    p1[hi] += k
    return rows, k, dp, label, alg, rcase, case, state


def run_V(ds: DigitString) -> ThreeConfig:
    tag = classify(ds)
    flag = special_flag(ds, tag)
    if not flag.special:
        raise ConstructionError(f"{ds} is not special")
    g, m = ds.base, flag.m
    rows, k, dp, label, alg, rcase, case, state = special_rows(list(ds.digits), g, m, trace=True)
    red = SpecialReduction(
        k=k,
        s=DigitString.from_int(g**m + g ** (m - 1), g),
        n_prime=DigitString(tuple(dp), g),
        reduced_case=rcase,
        inner_type=TypeTag(label),
        inner_algorithm=alg,
    )
    parts = [DigitString.from_msd(r, g) for r in rows]
    cfg = ThreeConfig(*parts, adjustment=case, state=state, reduction=red)
    verify_config(cfg, ds)
    return cfg


def inner_seed(red: SpecialReduction) -> Seed:
    """Seed used for the shifted number (B1/B2 in the shortened case)."""
    dp = red.n_prime.digits
    x1, y1, z1, a, b, c = seed_values(red.inner_type.value, dp, red.n_prime.base)
    if red.reduced_case == SHRUNK_104:
        a, b, c = len(dp), len(dp) - 2, len(dp) - 3
    pair = (1, x1) if red.inner_type.family == "B" else None
    return Seed(red.inner_type, x1, y1, z1, a, b, c, pair)
