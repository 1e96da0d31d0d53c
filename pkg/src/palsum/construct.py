"""Two-sided digit sweeps that build three palindromes, plus their adjustments.

Every algorithm fills the outer digits of the palindromes column by column:
``z_i`` fixes the digit of n in column i from the right, ``y_i`` fixes a
column on the left assuming one unit of carry, and ``x_i`` supplies that
unit when the carry does not materialise.  The two sweeps meet in the middle
and at most one column is wrong; an adjustment then rewrites a few central
cells (always symmetrically, so the rows stay palindromes).

Digit arrays are 1-based (index 0 unused) so ``x[i]`` is the i-th digit of a
palindrome counted from its outer end.  For algorithms III and IV the first
palindrome has the shape ``1 x1 x2 ... x2 x1 1``.

Layouts (palindrome lengths, half stored):

==========  ======================  =============================
algorithm   lengths                 p1 half
==========  ======================  =============================
I           2m+1, 2m,   2m-1        x1 .. x_{m+1}
II          2m,   2m-1, 2m-2        x1 .. x_m
III         2m+1, 2m-1, 2m-2        1, x1 .. x_m
IV          2m,   2m-2, 2m-3        1, x1 .. x_{m-1}
==========  ======================  =============================
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .classify import Seed
from .digits import DigitString, add_digits, from_digits


class ConstructionError(AssertionError):
    """A guard from the adjustment tables or a post-check failed."""


class InvariantError(ConstructionError):
    """A digit or carry left its proven range."""


@dataclass
class WorkState:
    algorithm: str
    m: int
    x: list[int]
    y: list[int]
    z: list[int]
    c: list[int]
    case: str = "none"
    # temporary configuration (before adjustment), kept for tracing
    temp: tuple | None = None

    def to_dict(self):
        out = {
            "algorithm": self.algorithm,
            "m": self.m,
            "x": self.x[1:],
            "y": self.y[1:],
            "z": self.z[1:],
            "carries": self.c[1:],
            "case": self.case,
        }
        if self.temp is not None:
            out["temporary"] = [list(r) for r in self.temp]
        return out


@dataclass
class ThreeConfig:
    p1: DigitString
    p2: DigitString
    p3: DigitString
    adjustment: str
    state: WorkState | None = field(default=None, repr=False)
    reduction: object = field(default=None, repr=False)

    @property
    def parts(self):
        return (self.p1, self.p2, self.p3)


def _need(cond, what):
    if not cond:
        raise ConstructionError(what)


LAYOUT = {
    # algorithm -> (p1 length, p2 length, p3 length) as functions of m
    "I": lambda m: (2 * m + 1, 2 * m, 2 * m - 1),
    "II": lambda m: (2 * m, 2 * m - 1, 2 * m - 2),
    "III": lambda m: (2 * m + 1, 2 * m - 1, 2 * m - 2),
    "IV": lambda m: (2 * m, 2 * m - 2, 2 * m - 3),
}


def palindrome_from_half(half, length):
    """Full digit list (outer digit first) of a palindrome given its outer half."""
    half = list(half)
    return half + half[: length // 2][::-1]


def halves(algorithm, m, x, y, z):
    if algorithm == "I":
        return x[1 : m + 2], y[1 : m + 1], z[1 : m + 1]
    if algorithm == "II":
        return x[1 : m + 1], y[1 : m + 1], z[1:m]
    if algorithm == "III":
        return [1] + x[1 : m + 1], y[1 : m + 1], z[1:m]
    if algorithm == "IV":
        return [1] + x[1:m], y[1:m], z[1:m]
    raise ValueError(algorithm)


def assemble(algorithm, m, x, y, z, g):
    """The three palindromes as digit lists (outer digit first, so also last)."""
    l1, l2, l3 = LAYOUT[algorithm](m)
    a, b, c = halves(algorithm, m, x, y, z)
    every = a + b + c
    if min(every) < 0 or max(every) >= g:
        raise InvariantError(f"digit out of range in algorithm {algorithm}: {a} {b} {c}")
    return [a + a[: l1 // 2][::-1], b + b[: l2 // 2][::-1], c + c[: l3 // 2][::-1]]


# ---------------------------------------------------------------- sweeps


def _carry(total, g):
    c, r = divmod(total, g)
    if r or not 0 <= c <= 2:
        raise InvariantError(f"bad column total {total} (carry {c}, remainder {r})")
    return c


def _inner(d, g, x, y, z, c, start, stop, top, lag):
    """Main loop shared by the sweeps: column i pairs d[i-1] with d[top-i].

    ``lag`` is 1 when the first palindrome is one digit longer than the
    sweep index suggests (algorithms III and IV), so x_{i-1} sits in column i.
    """
    if stop <= start:
        return
    zp, cp, xp = z[start - 1], c[start - 1], x[start - 1]
    cols = []
    add = cols.append
    highs = d[top - stop + 1 : top - start + 1][::-1]
    for lo, t in zip(d[start - 1 : stop - 1], highs):
        xi = 1 if zp < t else 0
        yi = (t - zp - 1) % g
        s = (xp if lag else xi) + yi + cp - lo
        zp = -s % g
        cp = (s + zp) // g
        add((xi, yi, zp, cp))
        xp = xi
    xs, ys, zs, cs = zip(*cols)
    if max(cs) > 2 or min(cs) < 0:
        i = next(i for i, v in enumerate(cs) if not 0 <= v <= 2)
        raise InvariantError(f"carry {cs[i]} out of range in column {start + i}")
    x[start:stop], y[start:stop], z[start:stop], c[start:stop] = xs, ys, zs, cs


def sweep_I(d, g, x1, y1, z1, m):
    x = [0] * (m + 2)
    y = [0] * (m + 1)
    z = [0] * (m + 1)
    c = [0] * (m + 1)
    x[1], y[1], z[1] = x1, y1, z1
    c[1] = _carry(x1 + y1 + z1 - d[0], g)
    t = d[2 * m - 2]
    x[2] = (d[2 * m - 1] - y1 - (1 if z1 >= t else 0)) % g
    y[2] = (t - z1 - 1) % g
    z[2] = (d[1] - x[2] - y[2] - c[1]) % g
    c[2] = _carry(x[2] + y[2] + z[2] + c[1] - d[1], g)
    _inner(d, g, x, y, z, c, 3, m + 1, 2 * m, 0)
    x[m + 1] = 0
    return x, y, z, c


def sweep_II(d, g, x1, y1, z1, m):
    x = [0] * (m + 1)
    y = [0] * (m + 1)
    z = [0] * m
    c = [0] * (m + 1)
    x[1], y[1], z[1] = x1, y1, z1
    c[1] = _carry(x1 + y1 + z1 - d[0], g)
    t = d[2 * m - 3]
    x[2] = (d[2 * m - 2] - y1 - (1 if z1 >= t else 0)) % g
    y[2] = (t - z1 - 1) % g
    z[2] = (d[1] - x[2] - y[2] - c[1]) % g
    c[2] = _carry(x[2] + y[2] + z[2] + c[1] - d[1], g)
    _inner(d, g, x, y, z, c, 3, m, 2 * m - 1, 0)
    x[m] = 0
    y[m] = (d[m - 1] - z[m - 1] - c[m - 1]) % g
    c[m] = _carry(y[m] + z[m - 1] + c[m - 1] - d[m - 1], g)
    return x, y, z, c


def sweep_III(d, g, x1, y1, z1, m):
    x = [0] * (m + 1)
    y = [0] * (m + 1)
    z = [0] * m
    c = [0] * (m + 1)
    x[1], y[1], z[1] = x1, y1, z1
    c[1] = _carry(1 + y1 + z1 - d[0], g)
    t = d[2 * m - 3]
    x[2] = (d[2 * m - 2] - y1 - (1 if z1 >= t else 0)) % g
    y[2] = (t - z1 - 1) % g
    z[2] = (d[1] - x1 - y[2] - c[1]) % g
    c[2] = _carry(x1 + y[2] + z[2] + c[1] - d[1], g)
    _inner(d, g, x, y, z, c, 3, m, 2 * m - 1, 1)
    x[m] = 0
    y[m] = (d[m - 1] - z[m - 1] - x[m - 1] - c[m - 1]) % g
    c[m] = _carry(x[m - 1] + y[m] + z[m - 1] + c[m - 1] - d[m - 1], g)
    return x, y, z, c


def sweep_IV(d, g, x1, y1, z1, m):
    x = [0] * m
    y = [0] * m
    z = [0] * m
    c = [0] * m
    x[1], y[1], z[1] = x1, y1, z1
    c[1] = _carry(1 + y1 + z1 - d[0], g)
    t = d[2 * m - 4]
    x[2] = (d[2 * m - 3] - y1 - (1 if z1 >= t else 0)) % g
    y[2] = (t - z1 - 1) % g
    z[2] = (d[1] - x1 - y[2] - c[1]) % g
    c[2] = _carry(x1 + y[2] + z[2] + c[1] - d[1], g)
    _inner(d, g, x, y, z, c, 3, m, 2 * m - 2, 1)
    return x, y, z, c


# ----------------------------------------------------------- adjustments


def adjust_I(x, y, z, c, m, g):
    cm = c[m]
    if cm == 1:
        return "none"
    if cm == 0:
        x[m + 1] = 1
        return "I.2"
    _need(y[m] != 0, "I.3 requires y_m != 0")
    if m == 2 and z[m] != g - 1:
        # five-digit n: x2 is not confined to {0, 1}, so c_2 = 2 can occur with
        # z_2 < g-1; moving one unit from y_2 to z_2 removes exactly g**2
        y[m] -= 1
        z[m] += 1
        return "I.3.m2"
    _need(z[m] == g - 1, "I.3 requires z_m = g-1")
    x[m + 1] = 1
    y[m] -= 1
    z[m] = 0
    return "I.3"


def adjust_II(x, y, z, c, m, g):
    cm = c[m]
    if cm == 1:
        return "none"
    if cm == 0:
        if y[m] != 0:
            x[m] = 1
            y[m] -= 1
            return "II.2.i"
        if y[m - 1] != 0:
            _need(z[m - 1] != g - 1, "II.2.ii.a requires z_{m-1} != g-1")
            x[m] = 1
            y[m - 1] -= 1
            y[m] = g - 2
            z[m - 1] += 1
            return "II.2.ii.a"
        if z[m - 1] != 0:
            y[m - 1] = 1
            y[m] = 1
            z[m - 1] -= 1
            return "II.2.ii.b"
        if c[m - 1] == 0:
            return _adjust_II_six_digit(x, y, z, m, g)
        _need(m == 3, "II.2.ii.c requires m = 3")
        _need(x[m - 1] >= 1, "II.2.ii.c requires x_{m-1} >= 1")
        x[m - 1] -= 1
        x[m] = 1
        y[m - 1] = g - 1
        y[m] = g - 4
        z[m - 1] = 2
        return "II.2.ii.c"
    _need(z[m - 1] == g - 1 and y[m] == g - 1, "II.3 requires z_{m-1} = y_m = g-1")
    _need(y[m - 1] >= 1, "II.3 requires y_{m-1} >= 1")
    x[m] = 1
    y[m - 1] -= 1
    y[m] = g - 2
    z[m - 1] = 0
    return "II.3"


class Replacement(Exception):
    """Signals that an adjustment replaces the palindromes wholesale.

    Only the six-digit completion of II.2.ii.c does this; ``rows`` holds the
    new palindromes as outer-first digit lists.
    """

    def __init__(self, case, rows):
        super().__init__(case)
        self.case = case
        self.rows = rows


def _adjust_II_six_digit(x, y, z, m, g):
    # Only reachable for six-digit n whose digit delta_2 is zero.
    _need(m == 3, "six-digit II.2.ii.c completion requires m = 3")
    x1, x2, y1, z1 = x[1], x[2], y[1], z[1]
    if x2 != 0:
        x[2] = x2 - 1
        x[3] = g - 1
        y[2] = 1
        y[3] = 1
        return "L6.II.2.ii.c.x2"
    if x1 == 1:
        _need(y1 == g - 1 and z1 == g - 1, "L6 case i requires y1 = z1 = g-1")
        raise Replacement("L6.II.2.ii.c.i", [[2, 0, 0, 0, 0, 2], [1, 1], [g - 4]])
    if y1 != g - 1:
        x[1] = x1 - 1
        x[2] = g - 1
        x[3] = 0
        y[1] = y1 + 1
        y[2] = 0
        y[3] = g - 2
        z[2] = 1
        return "L6.II.2.ii.c.ii"
    _need(z1 == g - 1, "L6: y1 = g-1 forces z1 = g-1")
    _need(x1 != g - 1, "L6 case iv is unreachable for six-digit n")
    raise Replacement("L6.II.2.ii.c.iii", [[x1 + 1, 0, 0, 0, 0, x1 + 1], [1, 1], [g - 4]])


def adjust_III(x, y, z, c, m, g):
    cm = c[m]
    if cm == 1:
        return "none"
    if cm == 0:
        x[m] = 1
        return "III.2"
    _need(y[m] != 0, "III.3 requires y_m != 0")
    if y[m - 1] != 0:
        if z[m - 1] != g - 1:
            y[m - 1] -= 1
            y[m] -= 1
            z[m - 1] += 1
            return "III.3.i"
        x[m] = 1
        y[m - 1] -= 1
        z[m - 1] = 0
        return "III.3.ii"
    _need(x[m - 1] != 0, "III.3.iii/iv require x_{m-1} != 0")
    if z[m - 1] != g - 1:
        x[m - 1] -= 1
        y[m - 1] = g - 1
        y[m] -= 1
        z[m - 1] += 1
        return "III.3.iii"
    x[m - 1] -= 1
    x[m] = 1
    y[m - 1] = g - 1
    z[m - 1] = 0
    return "III.3.iv"


def adjust_IV(x, y, z, c, m, g):
    a = m - 1
    b = m - 2
    s = x[a] + c[a]
    if s == 1:
        return "none"
    if s == 0:
        if y[a] == g - 1:
            _need(y[b] != 0, "IV.3 requires y_{m-2} != 0")
            _need(z[b] != g - 1, "IV.3 requires z_{m-2} != g-1")
            _need(z[a] == 0, "IV.3 requires z_{m-1} = 0")
            x[a] = 1
            y[b] -= 1
            y[a] = g - 2
            z[b] += 1
            z[a] = 1
            return "IV.3"
        _need(y[a] != 0, "IV.2 requires y_{m-1} != 0")
        if z[a] != 0:
            y[a] += 1
            z[a] -= 1
            return "IV.2.i"
        if y[b] != 0:
            if y[a] != 1:
                if z[b] != g - 1:
                    x[a] = 1
                    y[b] -= 1
                    y[a] -= 1
                    z[b] += 1
                    z[a] = 1
                    return "IV.2.ii.a"
                x[a] = 2
                y[b] -= 1
                y[a] -= 2
                z[b] = 0
                z[a] = 3
                return "IV.2.ii.b"
            _need(z[b] == g - 1, "IV.2.ii.c requires z_{m-2} = g-1")
            x[a] = 1
            y[b] -= 1
            y[a] = g - 1
            z[b] = 0
            z[a] = 3
            return "IV.2.ii.c"
        _need(x[b] != 0, "IV.2.iii requires x_{m-2} != 0")
        if z[b] != g - 1:
            x[b] -= 1
            x[a] = 1
            y[b] = g - 1
            y[a] -= 1
            z[b] += 1
            z[a] = 1
            return "IV.2.iii.a"
        if y[a] != 1:
            x[b] -= 1
            x[a] = 2
            y[b] = g - 1
            y[a] -= 2
            z[b] = 0
            z[a] = 3
            return "IV.2.iii.b"
        x[b] -= 1
        x[a] = 1
        y[b] = g - 1
        y[a] = g - 1
        z[b] = 0
        z[a] = 3
        return "IV.2.iii.c"
    if s == 2 and x[a] == 0:
        _need(y[a] != 0, "IV.4 requires y_{m-1} != 0")
        if z[a] != g - 1:
            y[a] -= 1
            z[a] += 1
            return "IV.4.i"
        if z[b] != g - 1:
            _need(y[a] != 1, "IV.4.ii requires y_{m-1} != 1")
            if y[b] != 0:
                x[a] = 1
                y[b] -= 1
                y[a] -= 2
                z[b] += 1
                z[a] = 1
                return "IV.4.ii.a"
            _need(x[b] != 0, "IV.4.ii.b requires x_{m-2} != 0")
            x[b] -= 1
            x[a] = 1
            y[b] = g - 1
            y[a] -= 2
            z[b] += 1
            z[a] = 1
            return "IV.4.ii.b"
        if y[a] not in (g - 1, g - 2):
            _need(x[b] >= 1, "IV.4.iii.a requires x_{m-2} >= 1")
            if y[b] != g - 1:
                x[b] -= 1
                x[a] = g - 2
                y[b] += 1
                y[a] += 2
                z[b] = g - 2
                z[a] = g - 2
                return "IV.4.iii.a"
            x[a] = g - 2
            y[b] = 0
            y[a] += 2
            z[b] = g - 2
            z[a] = g - 2
            return "IV.4.iii.a'"
        if y[b] >= 1:
            x[a] = 2
            y[b] -= 1
            y[a] -= 3
            z[b] = 0
            z[a] = 3
            return "IV.4.iii.b"
        _need(x[b] >= 1, "IV.4.iii.b requires x_{m-2} >= 1 when y_{m-2} = 0")
        x[b] -= 1
        x[a] = 2
        y[b] = g - 1
        y[a] -= 3
        z[b] = 0
        z[a] = 3
        return "IV.4.iii.b'"
    if s == 2:
        _need(z[b] != g - 1, "IV.5 requires z_{m-2} != g-1")
        _need(y[a] != g - 1, "IV.5 requires y_{m-1} != g-1")
        if z[a] != g - 1:
            if y[a] != 0:
                y[a] -= 1
                z[a] += 1
                return "IV.5.i"
            x[a] = 0
            y[a] = g - 1
            z[a] += 1
            return "IV.5.ii"
        if z[b] != 0:
            if y[b] != g - 1:
                x[a] = 0
                y[b] += 1
                y[a] += 1
                z[b] -= 1
                z[a] = g - 2
                return "IV.5.iii.a"
            if y[a] == 0:
                y[b] = g - 2
                y[a] = g - 2
                z[b] += 1
                z[a] = 1
                return "IV.5.iii.c"
            if y[a] == 1:
                y[b] = g - 2
                y[a] = g - 1
                z[b] += 1
                z[a] = 1
                return "IV.5.iii.d"
            x[a] = 2
            y[b] = g - 2
            y[a] -= 2
            z[b] += 1
            z[a] = 1
            return "IV.5.iii.b"
        if y[b] != 0:
            if y[a] == 0:
                y[b] -= 1
                y[a] = g - 2
                z[b] = 1
                z[a] = 1
                return "IV.5.iv.b"
            if y[a] == 1:
                y[b] -= 1
                y[a] = g - 1
                z[b] = 1
                z[a] = 1
                return "IV.5.iv.c"
            x[a] = 2
            y[b] -= 1
            y[a] -= 2
            z[b] = 1
            z[a] = 1
            return "IV.5.iv.a"
        _need(x[b] != 0, "IV.5.v requires x_{m-2} != 0")
        x[b] -= 1
        y[b] = g - 1
        z[b] = 1
        z[a] = 1
        if y[a] == 0:
            y[a] = g - 2
            return "IV.5.v.b"
        if y[a] == 1:
            y[a] = g - 1
            return "IV.5.v.c"
        x[a] = 2
        y[a] -= 2
        return "IV.5.v.a"
    _need(s == 3, f"IV: x_{{m-1}} + c_{{m-1}} = {s} out of range")
    _need(y[a] >= 1 and z[a] == g - 1, "IV.6 requires y_{m-1} >= 1 and z_{m-1} = g-1")
    y[a] -= 1
    z[a] = 0
    return "IV.6"


SWEEP = {"I": sweep_I, "II": sweep_II, "III": sweep_III, "IV": sweep_IV}
ADJUST = {"I": adjust_I, "II": adjust_II, "III": adjust_III, "IV": adjust_IV}


def _check_invariants(algorithm, m, x, c, g):
    # carries were already confined to {0, 1, 2} by _carry
    if algorithm in ("I", "II"):
        if m >= 3 and max(x[3 : m + 1]) > 1:
            raise InvariantError(f"x_i outside {{0,1}} for i >= 3: {x[1:]}")
    elif not 0 <= x[2] <= 3:
        raise InvariantError(f"type-B x_2 = {x[2]} outside [0, 3]")


def build(algorithm, d, g, x1, y1, z1, m, trace=False):
    """Run sweep and adjustment on little-endian digits ``d``.

    Returns ``(rows, case, state)`` where ``rows`` are the three palindromes
    as outer-first digit lists and ``state`` is a WorkState when ``trace``.
    """
    x, y, z, c = SWEEP[algorithm](d, g, x1, y1, z1, m)
    _check_invariants(algorithm, m, x, c, g)
    state = None
    if trace:
        state = WorkState(algorithm, m, list(x), list(y), list(z), list(c))
        state.temp = tuple(assemble(algorithm, m, x, y, z, g))
    try:
        case = ADJUST[algorithm](x, y, z, c, m, g)
        rows = assemble(algorithm, m, x, y, z, g)
    except Replacement as r:
        case, rows = r.case, r.rows
    if state is not None:
        state.x, state.y, state.z, state.case = x, y, z, case
    return rows, case, state


def rows_value(rows, g):
    return sum(from_digits(r[::-1], g) for r in rows)


def _to_ds(row, g):
    return DigitString.from_msd(row, g)


def _run(algorithm, ds, seed: Seed, m, expected_lengths):
    g = ds.base
    if g < 5:
        raise ConstructionError("constructive algorithms need base >= 5")
    if seed.lengths != expected_lengths:
        raise ConstructionError(
            f"algorithm {algorithm} needs palindrome lengths {expected_lengths}, seed gives {seed.lengths}"
        )
    d = list(ds.digits)
    rows, case, state = build(algorithm, d, g, seed.x1, seed.y1, seed.z1, m, trace=True)
    cfg = ThreeConfig(*(_to_ds(r, g) for r in rows), adjustment=case, state=state)
    verify_config(cfg, ds)
    return cfg


def verify_config(cfg: ThreeConfig, ds: DigitString):
    g = ds.base
    for p in cfg.parts:
        if p.digits != p.digits[::-1]:
            raise ConstructionError(f"{p} is not a palindrome ({cfg.adjustment})")
    total = add_digits([p.digits for p in cfg.parts], g)
    if tuple(total) != ds.digits:
        dump = json.dumps(cfg.state.to_dict()) if cfg.state else ""
        raise ConstructionError(f"sum mismatch for {ds} after {cfg.adjustment}: {dump}")


def run_I(ds: DigitString, seed: Seed) -> ThreeConfig:
    m = (seed.len1 - 1) // 2
    _need(m >= 2, "Algorithm I needs m >= 2")
    return _run("I", ds, seed, m, LAYOUT["I"](m))


def run_II(ds: DigitString, seed: Seed) -> ThreeConfig:
    m = seed.len1 // 2
    _need(m >= 3, "Algorithm II needs m >= 3")
    return _run("II", ds, seed, m, LAYOUT["II"](m))


def run_III(ds: DigitString, seed: Seed) -> ThreeConfig:
    m = (seed.len1 - 1) // 2
    _need(m >= 3, "Algorithm III needs m >= 3")
    return _run("III", ds, seed, m, LAYOUT["III"](m))


def run_IV(ds: DigitString, seed: Seed) -> ThreeConfig:
    m = seed.len1 // 2
    _need(m >= 4, "Algorithm IV needs m >= 4")
    return _run("IV", ds, seed, m, LAYOUT["IV"](m))


def column_sums(rows, g, width=None):
    """Digits produced in each column (little-endian) by summing the rows.

    ``rows`` are outer-first digit lists as produced by ``assemble``; the
    result is Delta_0, Delta_1, ... including the final carry digits.
    """
    little = [r[::-1] for r in rows]
    out = add_digits(little, g)
    if width is not None:
        out = out + [0] * (width - len(out))
    return out


def state_column_sums(state: WorkState, ds: DigitString, temporary=False):
    """Column digits of a traced run, either final or temporary configuration."""
    g = ds.base
    rows = state.temp if temporary else assemble(state.algorithm, state.m, state.x, state.y, state.z, g)
    return column_sums(rows, g, len(ds))
