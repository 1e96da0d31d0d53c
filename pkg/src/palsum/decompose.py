"""Top-level entry points: write any positive integer as three palindromes."""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import TypeTag, seed_values, type_of
from .construct import ConstructionError, build
from .digits import _ASCII, DigitError, DigitString, from_digits, to_digits
from .small import small_parts
from .special import special_rows


@dataclass(frozen=True)
class Provenance:
    tag: str
    algorithm: str
    adjustment: str
    trace: dict | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Decomposition:
    n: DigitString
    parts: tuple
    provenance: Provenance

    def to_dict(self, radix=None):
        from .digits import render

        g = self.n.base
        radix = g if radix is None else radix
        return {
            "n": render(self.n, radix),
            "base": g,
            "parts": [render(p, radix) for p in self.parts],
            "type": self.provenance.tag,
            "algorithm": self.provenance.algorithm,
            "adjustment": self.provenance.adjustment,
        }


def plan(d, g):
    """Type, algorithm, m and seed digits for little-endian ``d`` with l >= 7."""
    label = type_of(d, g)
    x1, y1, z1, len1, _, _ = seed_values(label, d, g)
    if len1 % 2:
        m = (len1 - 1) // 2
        alg = "I" if label[0] == "A" else "III"
    else:
        m = len1 // 2
        if d[m - 1] == 0 or d[m] == 0:
            alg = "V"
        else:
            alg = "II" if label[0] == "A" else "IV"
    return label, alg, m, (x1, y1, z1)


def raw_rows(n: int, g: int, trace=False):
    """Unverified core: ``(rows, tag, algorithm, adjustment, extra)``.

    ``rows`` are three digit lists (most significant first) in the order the
    construction produces them; ``extra`` holds trace information.
    """
    if g < 5:
        raise DigitError(f"base must be at least 5, got {g}")
    if n < 1:
        raise DigitError("n must be a positive integer")
    d = to_digits(n, g)
    if len(d) < 7:
        parts, case = small_parts(n, g)
        return [to_digits(p, g)[::-1] for p in parts], case.lemma, "small", case.branch, {}
    label, alg, m, (x1, y1, z1) = plan(d, g)
    extra = {}
    if alg == "V":
        rows, k, dp, inner, inner_alg, rcase, case, state = special_rows(d, g, m, trace=trace)
        extra = {"k": k, "inner_type": inner, "inner_algorithm": inner_alg, "reduced_case": rcase}
        if trace:
            extra["n_prime"] = from_digits(dp, g)
            extra["state"] = state.to_dict()
    else:
        rows, case, state = build(alg, d, g, x1, y1, z1, m, trace=trace)
        if trace:
            extra["state"] = state.to_dict()
    return rows, label, alg, case, extra


def raw_decompose(n: int, g: int, trace=False):
    """Like ``raw_rows`` but with the parts as ints."""
    rows, tag, alg, case, extra = raw_rows(n, g, trace)
    return [from_digits(r[::-1], g) for r in rows], tag, alg, case, extra


def check_rows(n: int, g: int, rows) -> bool:
    """Rows are canonical palindromic digit lists whose values sum to n."""
    total = 0
    for r in rows:
        if r != r[::-1] or (r[0] == 0 and len(r) > 1):
            return False
        if g <= 36:
            # bytes() rejects negative digits and int() rejects digits >= g
            try:
                total += int(bytes(r).translate(_ASCII), g)
            except ValueError:
                return False
            continue
        if min(r) < 0 or max(r) >= g:
            return False
        total += from_digits(r, g)  # a palindrome reads the same both ways
    return total == n


def is_palindrome_int(v: int, g: int) -> bool:
    d = to_digits(v, g)
    return d == d[::-1]


def check_parts(n: int, g: int, parts) -> bool:
    return sum(parts) == n and all(p >= 0 and is_palindrome_int(p, g) for p in parts)


def _order(parts, g):
    # longest first, zeros last; ties keep construction order
    keyed = sorted(enumerate(parts), key=lambda t: (t[1] == 0, -len(to_digits(t[1], g)), t[0]))
    return [p for _, p in keyed]


def fast_decompose(n: int, g: int):
    """Verified ``(parts, tag, algorithm, adjustment)`` using plain ints.

    Meant for bulk checks; raises ConstructionError when verification fails.
    """
    rows, tag, alg, case, _ = raw_rows(n, g)
    if not check_rows(n, g, rows):
        raise ConstructionError(f"decomposition of {n} in base {g} does not verify: {rows}")
    return [from_digits(r, g) for r in rows], tag, alg, case


def fast_check(n: int, g: int):
    """Decompose and verify, returning only ``(tag, algorithm, adjustment)``."""
    rows, tag, alg, case, _ = raw_rows(n, g)
    if not check_rows(n, g, rows):
        raise ConstructionError(f"decomposition of {n} in base {g} does not verify: {rows}")
    return tag, alg, case


def decompose(n, base: int | None = None, trace=False) -> Decomposition:
    """Three base-g palindromes summing to ``n``.

    ``n`` is a DigitString, or an int together with ``base``.
    """
    if isinstance(n, DigitString):
        ds = n
        if base is not None and base != ds.base:
            raise DigitError(f"base mismatch: {ds.base} vs {base}")
    else:
        if base is None:
            raise DigitError("base is required when n is an int")
        ds = DigitString.from_int(int(n), base)
    g = ds.base
    value = int(ds)
    parts, tag, alg, case, extra = raw_decompose(value, g, trace=trace)
    if not check_parts(value, g, parts):
        raise ConstructionError(f"decomposition of {ds} does not verify ({alg}, {case}): {parts} {extra}")
    parts = _order(parts, g)
    prov = Provenance(str(tag), alg, case, extra or None)
    return Decomposition(ds, tuple(DigitString.from_int(p, g) for p in parts), prov)


def verify(d: Decomposition) -> bool:
    """True iff every part is a palindrome in the base of n and they sum to n."""
    g = d.n.base
    for p in d.parts:
        if p.base != g:
            raise DigitError(f"base mismatch: {g} vs {p.base}")
    if len(d.parts) != 3:
        return False
    if any(p.digits != p.digits[::-1] for p in d.parts):
        return False
    return sum(int(p) for p in d.parts) == int(d.n)


def type_tag(tag: str):
    try:
        return TypeTag(tag)
    except ValueError:
        return tag


def _check_chunk(args):
    g, lo, hi = args
    hist = {}
    failures = []
    for n in range(lo, hi):
        try:
            _, alg, case = fast_check(n, g)
        except (ConstructionError, AssertionError, DigitError) as exc:
            failures.append((n, f"{type(exc).__name__}: {exc}"))
            continue
        key = f"{alg}:{case}"
        hist[key] = hist.get(key, 0) + 1
    return hist, failures


def check_range(g: int, lo: int, hi: int, workers: int = 1, chunk: int = 200_000):
    """Decompose and verify every n in [lo, hi).

    Returns ``(failures, histogram)``: a list of ``(n, message)`` and a dict
    from ``"algorithm:adjustment"`` to counts, with keys sorted.
    """
    lo = max(lo, 1)
    jobs = [(g, a, min(a + chunk, hi)) for a in range(lo, hi, chunk)]
    if workers > 1 and len(jobs) > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            results = pool.map(_check_chunk, jobs)
    else:
        results = [_check_chunk(j) for j in jobs]
    hist = {}
    failures = []
    for h, f in results:
        for k, v in h.items():
            hist[k] = hist.get(k, 0) + v
        failures.extend(f)
    return failures, dict(sorted(hist.items()))
