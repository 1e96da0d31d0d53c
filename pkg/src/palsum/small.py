"""Closed-form decompositions for integers with at most six digits.

Two- and three-digit numbers are mostly sums of two palindromes; the
exceptions are ``(d+1)d`` for 1 <= d <= g-2 and ``201``, which take three.
Four- to six-digit numbers subtract a suitable palindrome and fall back on
the two-palindrome tables, or use explicit digit tables; five- and six-digit
numbers that do not start with 1 reuse the sweeps of algorithms I and II.

Branch labels name the table row used, e.g. ``L4.iii.a`` or ``L6.v.c.d1=2``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import seed_values, type_of
from .construct import ThreeConfig, build, verify_config
from .digits import DigitString, from_digits, to_digits


class SmallCaseError(AssertionError):
    pass


@dataclass(frozen=True)
class SmallCase:
    lemma: str
    branch: str


def _num(g, *digits):
    """Value of the digits (most significant first); each must be a digit."""
    v = 0
    for d in digits:
        if not 0 <= d < g:
            raise SmallCaseError(f"digit {d} out of range in table row")
        v = v * g + d
    return v


def _split(S, g, lo=0):
    """x + y = S with lo <= x, y <= g-1, taking x as large as possible."""
    x = min(g - 1, S - lo)
    y = S - x
    if x < lo or not lo <= y <= g - 1:
        raise SmallCaseError(f"cannot split {S} into two digits >= {lo}")
    return x, y


def _exact(total, g):
    c, r = divmod(total, g)
    if r:
        raise SmallCaseError(f"column total {total} leaves remainder {r}")
    return c


def two_small(m, g):
    """Two palindromes summing to 0 <= m < g**3, or None for the exceptions.

    Returns ``(branch, [p, q])``.
    """
    if m < g:
        return "single_digit", [m, 0]
    if m == g:
        return "L2.g", [g - 1, 1]
    d = to_digits(m, g)
    if len(d) == 2:
        d1, d0 = d[1], d[0]
        if d1 <= d0:
            return "L2.i", [_num(g, d1, d1), d0 - d1]
        if d1 > d0 + 1:
            return "L2.ii", [_num(g, d1 - 1, d1 - 1), g + d0 - d1 + 1]
        return None
    if len(d) == 3:
        d2, d1, d0 = d[2], d[1], d[0]
        if d2 <= d0:
            return "L3.i", [_num(g, d2, d1, d2), d0 - d2]
        if d1 != 0:
            return "L3.ii", [_num(g, d2, d1 - 1, d2), g + d0 - d2]
        if (d2 - d0 - 1) % g:
            return "L3.iii", [_num(g, d2 - 1, g - 1, d2 - 1), g + d0 - d2 + 1]
        if d2 >= 3:
            return "L3.iv", [_num(g, d2 - 2, g - 1, d2 - 2), _num(g, 1, 1, 1)]
        if d2 == 1:
            return "L3.vi", [_num(g, g - 1, g - 1), 1]
        return None
    raise SmallCaseError(f"{m} has more than three digits")


def _upto3(n, g):
    d = to_digits(n, g)
    if len(d) == 1:
        return SmallCase("single_digit", "single_digit"), [n, 0, 0]
    t = two_small(n, g)
    lemma = "L2" if len(d) == 2 else "L3"
    if t is not None:
        branch, parts = t
        return SmallCase(lemma, branch), parts + [0]
    if len(d) == 2:
        d0 = d[0]
        return SmallCase("L2", "L2.iii"), [_num(g, d0, d0), g - 1, 1]
    return SmallCase("L3", "L3.v"), [_num(g, 1, 0, 1), _num(g, g - 1, g - 1), 1]


def _four(n, g, d):
    d3, d0 = d[3], d[0]
    base = _num(g, d3, 0, 0, d3)
    if n >= base:
        r = n - base
        t = two_small(r, g)
        if t is not None:
            return "L4.i", [base] + t[1]
        if r == 2 * g * g + 1:
            if d3 == 1:
                return "L4.ii.d3=1", [_num(g, 1, 1, 1, 1), _num(g, g - 2, g - 2), 3]
            if d3 == g - 1:
                return "L4.ii.d3=g-1", [_num(g, g - 1, 1, 1, g - 1), _num(g, g - 2, g - 2), 3]
            return "L4.ii", [_num(g, d3 - 1, g - 1, g - 1, d3 - 1), _num(g, 2, 1, 2), 0]
        delta = r % g
        if d3 + delta <= g - 1:
            if d3 == 1:
                return "L4.iii.a.d3=1", [_num(g, g - 1, g - 1, g - 1), _num(g, delta + 1, delta + 1), 1]
            branch = "L4.iii.a"
        else:
            branch = "L4.iii.b"
        return branch, [_num(g, d3 - 1, g - 2, g - 2, d3 - 1), _num(g, 1, 3, 1), _num(g, delta, delta)]
    if d3 != 1:
        return "L4.iv", [_num(g, d3 - 1, g - 1, g - 1, d3 - 1), g + d0 - d3, 1]
    return "L4.v", [_num(g, g - 1, g - 1, g - 1), 1, 0]


def _rows_to_values(rows, g):
    return [from_digits(r[::-1], g) for r in rows]


def _via_algorithm(alg, d, g, m):
    label = type_of(d, g)
    x1, y1, z1, _, _, _ = seed_values(label, d, g)
    rows, case, _ = build(alg, d, g, x1, y1, z1, m)
    return label, case, _rows_to_values(rows, g)


def _five(n, g, d):
    if d[4] != 1:
        label, case, parts = _via_algorithm("I", d, g, 2)
        return f"L5.I.{case}", parts
    d3 = d[3]
    base = _num(g, 1, d3, 0, d3, 1)
    if n >= base:
        r = n - base
        t = two_small(r, g)
        if t is not None:
            return "L5.i", [base] + t[1]
        if r == 2 * g * g + 1:
            return "L5.ii", [_num(g, 1, d3, 1, d3, 1), _num(g, 1, 0, 1), 0]
        delta = r % g
        if d3 != 0:
            branch = "L5.iii.a" if delta + 1 + d3 <= g - 1 else "L5.iii.b"
            return branch, [
                _num(g, 1, d3 - 1, 1, d3 - 1, 1),
                _num(g, g - 1, delta + 1, g - 1),
                delta + 1,
            ]
        return "L5.iv", [_num(g, g - 1, g - 1, g - 1, g - 1), _num(g, delta + 1, delta + 1), 1]
    if d3 == 0:
        return "L5.v", [_num(g, g - 1, g - 1, g - 1, g - 1), 1, 0]
    base = _num(g, 1, d3 - 1, g - 1, d3 - 1, 1)
    r = n - base
    t = two_small(r, g)
    if t is not None:
        return "L5.vi", [base] + t[1]
    delta = r % g
    return "L5.vii", [
        _num(g, 1, d3 - 1, g - 2, d3 - 1, 1),
        _num(g, 1, delta + 1, 1),
        delta - 1,
    ]


def _min_y(d1, g, shift, banned):
    for y in range(1, g):
        if (d1 - shift - y) % g not in banned:
            return y
    raise SmallCaseError("no admissible y")


def _six_one(n, g, d):
    """Six-digit numbers with leading digit 1."""
    d4, d3, d2, d1, d0 = d[4], d[3], d[2], d[1], d[0]
    z1 = (d0 - d4 + 1) % g
    if z1 != 0 and (z1 != g - 1 or d2 != 0):
        x1, y1 = _split(g + d4 - 1, g, 1)
        x2, y2 = _split(g + d3 - 1, g)
        c1 = _exact(x1 + y1 + z1 - d0, g)
        z2 = (d1 - x2 - y2 - c1) % g
        c2 = _exact(x2 + y2 + z2 + c1 - d1, g)
        x3, y3 = _split(g + d2 - c2 - z1, g)
        branch = "L6.i" if z1 != g - 1 else "L6.ii"
        return branch, [
            _num(g, x1, x2, x3, x2, x1),
            _num(g, y1, y2, y3, y2, y1),
            _num(g, z1, z2, z1),
        ]
    if z1 == g - 1:
        # d2 = 0 here
        if d4 <= 2:
            x1 = g - 2 if d4 == 0 else g - 1
            y1 = 2 if d4 == 2 else 1
            zo = g - 1
            x2, y2 = _split(d3, g)
            c1 = _exact(x1 + y1 + zo - d0, g)
            z2 = (d1 - x2 - y2 - c1) % g
            c2 = _exact(x2 + y2 + z2 + c1 - d1, g)
            sub = "abc"[d4]
            if c2 == 2:
                if d4 != 2:
                    raise SmallCaseError("carry 2 outside case iii.c")
                return "L6.iii.c.c2=2", [_num(g, 1, 2, g - 2, g - 2, 2, 1), _num(g, 1, g - 3, 1), g - 2]
            x3, y3 = _split(g - c2 - z2, g)
            return f"L6.iii.{sub}", [
                _num(g, x1, x2, x3, x2, x1),
                _num(g, y1, y2, y3, y2, y1),
                _num(g, zo, z2, z2, zo),
            ]
        w = (d3 - 1) % g
        c4 = _exact(w + 1 - d3, g)
        z = (d1 - d3 - 1 + c4) % g
        c2 = _exact(2 - c4 + w + z - d1, g)
        return "L6.iii.d", [
            _num(g, 1, 1 - c4, 0, 0, 1 - c4, 1),
            _num(g, d4 - 1, w, 2 - c2, w, d4 - 1),
            _num(g, g - 2, z, g - 2),
        ]
    # z1 = 0
    if d3 != 0:
        if d4 != g - 1:
            x1, y1 = _split(g + d4, g, 1)
            zo = g - 1
            x2, y2 = _split(d3 - 1, g)
            c1 = _exact(x1 + y1 + zo - d0, g)
            z2 = (d1 - x2 - y2 - c1) % g
            c2 = _exact(x2 + y2 + z2 + c1 - d1, g)
            x3, y3 = _split(1 + d2 - c2, g)
            return "L6.iv.a", [
                _num(g, x1, x2, x3, x2, x1),
                _num(g, y1, y2, y3, y2, y1),
                _num(g, zo, z2, zo),
            ]
        y = _min_y(d1, g, 3, (g - 2, g - 1))
        x = (d3 - y) % g
        w = (d1 - 3 - y) % g
        c1 = _exact(3 + y + w - d1, g)
        for mu in (0, 1):
            mid = (d2 - x - 1 - c1 + mu) % g
            c2 = _exact(x - mu + mid + 1 + c1 - d2, g)
            if c2 != 2:
                break
        c3 = _exact(x + y - d3, g)
        return f"L6.iv.b.mu={mu}", [
            _num(g, 1, 3 - c3, x - mu, x - mu, 3 - c3, 1),
            _num(g, g - 4, y - c2 + mu, mid, y - c2 + mu, g - 4),
            _num(g, 1, w + (c2 - mu) + c3, 1),
        ]
    return _six_v(n, g, d)


def _six_v(n, g, d):
    d4, d2, d1 = d[4], d[2], d[1]
    if d4 == 0:
        if d2 != 0 or d1 != g - 1:
            r = n - _num(g, 1, 0, 0, 0, 0, 1)
            t = two_small(r, g)
            if t is None:
                raise SmallCaseError("v.a remainder is not a sum of two palindromes")
            return "L6.v.a.two", [_num(g, 1, 0, 0, 0, 0, 1)] + t[1]
        return "L6.v.a.d1=g-1", [
            _num(g, g - 1, 0, 1, 0, g - 1),
            _num(g, g - 1, g - 2, g - 2, g - 1),
            _num(g, 1, 0, 1),
        ]
    if d4 in (1, 2):
        k = d4
        pal = _num(g, 1, k, 0, 0, k, 1)
        if d2 >= 2 or (d2 == 1 and d1 not in (0, 1)):
            t = two_small(n - pal, g)
            if t is None:
                raise SmallCaseError("v.b/v.c remainder is not a sum of two palindromes")
            return f"L6.v.{'bc'[k - 1]}.two", [pal] + t[1]
        if k == 1:
            if d2 == 1 and d1 == 0:
                return "L6.v.b.d2=1.d1=0", [_num(g, 1, 0, g - 1, g - 1, 0, 1), _num(g, 1, g - 1, 1), g - 2]
            if d2 == 1:
                return "L6.v.b.d2=1.d1=1", [_num(g, 1, 1, 0, 0, 1, 1), _num(g, g - 1, g - 1), 0]
            if d1 >= 2:
                return "L6.v.b.d1>=2", [_num(g, 1, 1, 0, 0, 1, 1), _num(g, d1 - 2, d1 - 2), g - d1 + 1]
            if d1 == 1:
                return "L6.v.b.d1=1", [_num(g, 1, 0, 0, 0, 0, 1), _num(g, 1, 0, 0, 0, 1), g - 2]
            return "L6.v.b.d1=0", [_num(g, 1, 0, 0, 0, 0, 1), _num(g, g - 1, g - 1, g - 1, g - 1), 0]
        if d2 == 1:
            mid = g - 2 if d1 == 0 else g - 1
            return f"L6.v.c.d2=1.d1={d1}", [
                _num(g, 1, 1, g - 1, g - 1, 1, 1),
                _num(g, 1, mid, 1),
                g - 1,
            ]
        if d1 >= 4:
            return "L6.v.c.d1>=3", [pal, _num(g, d1 - 3, d1 - 3), g - d1 + 3]
        if d1 == 3:
            # the leftover g is written as (g-1) + 1
            return "L6.v.c.d1=3", [pal, g - 1, 1]
        if d1 == 2:
            return "L6.v.c.d1=2", [_num(g, 1, 1, g - 1, g - 1, 1, 1), _num(g, 1, 0, 1), g - 1]
        if d1 == 1:
            return "L6.v.c.d1=1", [_num(g, 1, 0, 0, 0, 0, 1), _num(g, 2, 0, 0, 0, 2), g - 2]
        return "L6.v.c.d1=0", [_num(g, 1, 1, g - 1, g - 1, 1, 1), _num(g, g - 2, g - 2), 2]
    if d4 == 3:
        y = _min_y(d1, g, 1, (0, g - 1))
        w = (d1 - 1 - y) % g
        c1 = _exact(1 + y + w - d1, g)
        mid = (d2 + y + 2) % g
        c2 = _exact(2 * g - y - 2 + mid - d2, g)
        return "L6.v.d", [
            _num(g, 1, 0, g - y - 1 - c1, g - y - 1 - c1, 0, 1),
            _num(g, 2, y - c2 + 1 + c1, mid, y - c2 + 1 + c1, 2),
            _num(g, g - 1, w + (c2 - 1) - c1, g - 1),
        ]
    y = _min_y(d1, g, 1, (0, g - 1))
    w = (d1 - 2 - y) % g
    c1 = _exact(2 + y + w - d1, g)
    mid = (d2 + y - 1) % g
    c2 = _exact(g - y + 1 + mid - d2, g)
    return "L6.v.e", [
        _num(g, 1, 2, g - y - c1, g - y - c1, 2, 1),
        _num(g, d4 - 3, y - c2 + c1, mid, y - c2 + c1, d4 - 3),
        _num(g, 1, w + c2 - c1, 1),
    ]


def _six(n, g, d):
    if d[5] != 1:
        label, case, parts = _via_algorithm("II", d, g, 3)
        return (case if case.startswith("L6.") else f"L6.II.{case}"), parts
    return _six_one(n, g, d)


# every branch label small_parts can report, for coverage checks
BRANCHES = frozenset(
    """
    single_digit L2.g L2.i L2.ii L2.iii L3.i L3.ii L3.iii L3.iv L3.v L3.vi
    L4.i L4.ii L4.ii.d3=1 L4.ii.d3=g-1 L4.iii.a L4.iii.a.d3=1 L4.iii.b L4.iv L4.v
    L5.I.none L5.I.I.2 L5.I.I.3 L5.I.I.3.m2
    L5.i L5.ii L5.iii.a L5.iii.b L5.iv L5.v L5.vi L5.vii
    L6.II.none L6.II.II.2.i L6.II.II.2.ii.a L6.II.II.2.ii.b L6.II.II.2.ii.c L6.II.II.3
    L6.II.2.ii.c.x2 L6.II.2.ii.c.i L6.II.2.ii.c.ii L6.II.2.ii.c.iii
    L6.i L6.ii L6.iii.a L6.iii.b L6.iii.c L6.iii.c.c2=2 L6.iii.d
    L6.iv.a L6.iv.b.mu=0 L6.iv.b.mu=1
    L6.v.a.two L6.v.a.d1=g-1
    L6.v.b.two L6.v.b.d1=0 L6.v.b.d1=1 L6.v.b.d1>=2 L6.v.b.d2=1.d1=0 L6.v.b.d2=1.d1=1
    L6.v.c.two L6.v.c.d1=0 L6.v.c.d1=1 L6.v.c.d1=2 L6.v.c.d1=3 L6.v.c.d1>=3
    L6.v.c.d2=1.d1=0 L6.v.c.d2=1.d1=1
    L6.v.d L6.v.e
    """.split()
)


def small_parts(n, g):
    """(parts, SmallCase) for 1 <= n < g**6; parts are three ints."""
    if g < 5:
        raise SmallCaseError("small cases need base >= 5")
    if n < 1:
        raise SmallCaseError("n must be positive")
    d = to_digits(n, g)
    l = len(d)
    if l <= 3:
        case, parts = _upto3(n, g)
        return parts, case
    if l == 4:
        branch, parts = _four(n, g, d)
    elif l == 5:
        branch, parts = _five(n, g, d)
    elif l == 6:
        branch, parts = _six(n, g, d)
    else:
        raise SmallCaseError(f"{l} digits is not a small case")
    return parts, SmallCase(f"L{l}", branch)


def decompose_small(ds: DigitString) -> ThreeConfig:
    if len(ds) > 6:
        raise SmallCaseError("decompose_small handles at most six digits")
    g = ds.base
    parts, case = small_parts(int(ds), g)
    cfg = ThreeConfig(*(DigitString.from_int(p, g) for p in parts), adjustment=case.branch)
    verify_config(cfg, ds)
    return cfg
