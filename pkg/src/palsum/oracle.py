"""Brute-force ground truth for small inputs.

Nothing here uses the constructive algorithms: palindromes are enumerated
directly and sums are found by search, so these functions can be used to
check the constructions independently.
"""

from __future__ import annotations

import bisect
import csv
from functools import lru_cache

from .digits import DigitError, DigitString, from_digits, to_digits


def _palindromes_of_length(l, g):
    if l < 1:
        raise DigitError("palindrome length must be at least 1")
    h = (l + 1) // 2
    out = []
    for half in range(g ** (h - 1), g**h):
        hd = to_digits(half, g)[::-1]  # most significant first
        full = hd + hd[: l // 2][::-1]
        out.append(from_digits(full[::-1], g))
    return out


def palindrome_count(l, g):
    """Number of base-g palindromes with exactly l digits."""
    return (g - 1) * g ** ((l + 1) // 2 - 1)


def enumerate_palindromes(l: int, base: int):
    """All palindromes with exactly ``l`` digits, ascending, as DigitStrings."""
    for v in _palindromes_of_length(l, base):
        yield DigitString.from_int(v, base)


@lru_cache(maxsize=64)
def _table(g, maxlen):
    """Sorted palindromes with at most ``maxlen`` digits (0 included) and a set of them."""
    vals = [0]
    for l in range(1, maxlen + 1):
        vals.extend(_palindromes_of_length(l, g))
    return vals, frozenset(vals)


def palindromes_upto(limit: int, g: int):
    """Sorted list of palindromes p with 0 <= p <= limit."""
    maxlen = len(to_digits(limit, g))
    vals, _ = _table(g, maxlen)
    return vals[: bisect.bisect_right(vals, limit)]


def _as_int(n, base):
    if isinstance(n, DigitString):
        if base is not None and base != n.base:
            raise DigitError(f"base mismatch: {n.base} vs {base}")
        return int(n), n.base
    if base is None:
        raise DigitError("base is required when n is an int")
    return int(n), base


def brute_two_int(n: int, g: int, allow_zero=True):
    """Pair (p, q) of palindromes, p >= q, with p + q = n; largest p first."""
    if n < 0:
        return None
    vals, members = _table(g, len(to_digits(n, g)))
    top = bisect.bisect_right(vals, n) - 1
    lo_q = 0 if allow_zero else 1
    for i in range(top, -1, -1):
        p = vals[i]
        q = n - p
        if q > p:
            break
        if q >= lo_q and p >= lo_q and q in members:
            return p, q
    return None


def brute_two(n, base: int | None = None, allow_zero=True):
    value, g = _as_int(n, base)
    pair = brute_two_int(value, g, allow_zero)
    if pair is None:
        return None
    return tuple(DigitString.from_int(v, g) for v in pair)


def brute_three_int(n: int, g: int, allow_zero=True):
    """Some triple of palindromes summing to n (sorted descending), or None."""
    vals, _ = _table(g, len(to_digits(n, g)))
    top = bisect.bisect_right(vals, n) - 1
    lo = 0 if allow_zero else 1
    for i in range(top, -1, -1):
        p = vals[i]
        if p < lo:
            break
        pair = brute_two_int(n - p, g, allow_zero)
        if pair is not None:
            return tuple(sorted((p,) + pair, reverse=True))
    return None


def brute_three(n, base: int | None = None, allow_zero=True):
    value, g = _as_int(n, base)
    t = brute_three_int(value, g, allow_zero)
    if t is None:
        return None
    return tuple(DigitString.from_int(v, g) for v in t)


def two_sum_table(limit: int, g: int, allow_zero=True) -> bytearray:
    """Sieve: entry n is 1 iff n (0 <= n <= limit) is a sum of two palindromes."""
    pals = palindromes_upto(limit, g)
    if not allow_zero:
        pals = [p for p in pals if p > 0]
    mark = bytearray(limit + 1)
    for i, p in enumerate(pals):
        room = limit - p
        j_end = bisect.bisect_right(pals, room)
        for q in pals[i:j_end]:
            mark[p + q] = 1
    return mark


def count_two_sums(limit, base: int | None = None, allow_zero=True) -> int:
    """How many n with 1 <= n <= limit are sums of two palindromes."""
    value, g = _as_int(limit, base)
    mark = two_sum_table(value, g, allow_zero)
    return sum(mark) - mark[0]


def write_counts_csv(path, rows):
    """Write (n_limit, base, count) rows with a header."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n_limit", "base", "count"])
        for r in rows:
            w.writerow(r)


def family_digits(l, g, middle):
    """Most-significant-first digits of the member with the given free block."""
    return [g - 1, g - 1] + list(middle) + [0, g - 1]


def family_members(l: int, base: int):
    """Integers (g-1)(g-1)*...*0(g-1) of length l, ascending."""
    if l < 4:
        raise DigitError("family members have at least four digits")
    g = base
    free = l - 4
    for v in range(g**free):
        mid = to_digits(v, g)[::-1] if free else []
        mid = [0] * (free - len(mid)) + mid if free else []
        yield DigitString.from_msd(family_digits(l, g, mid), g)


def family_count_below(limit: int, g: int) -> int:
    """Number of family members n with n <= limit."""
    count = 0
    l = 4
    while g ** (l - 1) <= limit:
        for ds in family_members(l, g):
            if int(ds) <= limit:
                count += 1
        l += 1
    return count
