"""Type assignment for integers with at least seven digits.

The type fixes the lengths of the three palindromes and their outer
digits.  Types A1-A4 use palindromes of lengths (l, l-1, l-2), A5/A6
drop the leading "1 0" of n and use (l-1, l-2, l-3), and the B types
use (l, l-2, l-3) with a first palindrome of the shape ``1 x1 ... x1 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .digits import DigitString


class ClassificationError(ValueError):
    pass


class TypeTag(str, enum.Enum):
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    A4 = "A4"
    A5 = "A5"
    A6 = "A6"
    B1 = "B1"
    B2 = "B2"
    B3 = "B3"
    B4 = "B4"
    B5 = "B5"
    B6 = "B6"
    B7 = "B7"

    def __str__(self):
        return self.value

    @property
    def family(self) -> str:
        return self.value[0]


TABLE_ORDER = tuple(TypeTag)


@dataclass(frozen=True)
class Seed:
    """Outer digits and lengths of the three palindromes.

    For B types ``x1`` is the *second* digit of p1, whose outer digit is
    always 1; ``leading_pair`` records both.
    """

    tag: TypeTag
    x1: int
    y1: int
    z1: int
    len1: int
    len2: int
    len3: int
    leading_pair: tuple[int, int] | None = None

    @property
    def lengths(self) -> tuple[int, int, int]:
        return (self.len1, self.len2, self.len3)


@dataclass(frozen=True)
class SpecialFlag:
    special: bool
    m: int


def _conditions(d, g):
    """Yield (label, holds) for every table row, in table order."""
    l = len(d)
    top, second, third, low = d[l - 1], d[l - 2], d[l - 3], d[0]
    big2 = second not in (0, 1, 2)
    za = (low - top - second + 1) % g
    zb = (low - top + 2) % g
    zc = (low - third) % g
    yield "A1", big2 and za != 0
    yield "A2", big2 and za == 0
    yield "A3", (not big2) and top != 1 and zb != 0
    yield "A4", (not big2) and top != 1 and zb == 0
    lead10 = top == 1 and second == 0
    yield "A5", lead10 and third <= 3 and zc != 0
    yield "A6", lead10 and third <= 2 and zc == 0
    one = top == 1
    yield "B1", one and second <= 2 and third >= 4 and zc != 0
    yield "B2", one and second <= 2 and third >= 3 and zc == 0
    mid = one and second in (1, 2)
    yield "B3", mid and third in (0, 1) and low == 0
    yield "B4", mid and third in (2, 3) and low == 0
    yield "B5", mid and third in (0, 1, 2) and low != 0
    yield "B6", mid and third == 3 and (low - 3) % g != 0
    yield "B7", mid and third == 3 and low == 3


def type_of(d, g: int) -> str:
    """First matching table row for little-endian digits ``d`` (len >= 3).

    Same answer as scanning ``_conditions`` in order, written as a decision
    tree because it sits on the hot path.
    """
    top, second, third, low = d[-1], d[-2], d[-3], d[0]
    if second > 2:
        return "A1" if (low - top - second + 1) % g else "A2"
    if top != 1:
        return "A3" if (low - top + 2) % g else "A4"
    zc = (low - third) % g
    if second == 0:
        if third <= 3 and zc:
            return "A5"
        if third <= 2 and not zc:
            return "A6"
    if third >= 4 and zc:
        return "B1"
    if third >= 3 and not zc:
        return "B2"
    if second == 0:
        raise AssertionError(f"no type matches digits {d[::-1]} in base {g}")
    if third <= 1 and low == 0:
        return "B3"
    if third <= 3 and low == 0:
        return "B4"
    if third <= 2:
        return "B5"
    # third == 3 and low != 0; B2 took low == 3
    return "B6"


def matching_types(ds: DigitString) -> list[TypeTag]:
    """Every table row whose conditions hold (normally exactly one)."""
    _check(ds)
    return [TypeTag(label) for label, holds in _conditions(ds.digits, ds.base) if holds]


def _check(ds: DigitString):
    if ds.base < 5:
        raise ClassificationError(f"classification needs base >= 5, got {ds.base}")
    if len(ds) < 7:
        raise ClassificationError(f"classification needs >= 7 digits, got {len(ds)}")


def classify(ds: DigitString) -> TypeTag:
    _check(ds)
    return TypeTag(type_of(ds.digits, ds.base))


def seed_values(label: str, d, g: int) -> tuple[int, int, int, int, int, int]:
    """(x1, y1, z1, len1, len2, len3) from the table row ``label``.

    The formulas are evaluated without re-checking the row's conditions,
    which lets callers reuse a B1/B2 seed outside its nominal range.
    """
    l = len(d)
    top, second, third, low = d[l - 1], d[l - 2], d[l - 3], d[0]
    if label == "A1":
        return top, second - 1, (low - top - second + 1) % g, l, l - 1, l - 2
    if label == "A2":
        return top, second - 2, 1, l, l - 1, l - 2
    if label == "A3":
        return top - 1, g - 1, (low - top + 2) % g, l, l - 1, l - 2
    if label == "A4":
        return top - 1, g - 2, 1, l, l - 1, l - 2
    if label == "A5":
        return g - 1, third + 1, (low - third) % g, l - 1, l - 2, l - 3
    if label == "A6":
        return g - 1, third + 2, g - 1, l - 1, l - 2, l - 3
    if label == "B1":
        return second, third - 1, (low - third) % g, l, l - 2, l - 3
    if label == "B2":
        return second, third - 2, 1, l, l - 2, l - 3
    if label == "B3":
        return second - 1, g - 2, 1, l, l - 2, l - 3
    if label == "B4":
        return second, 1, g - 2, l, l - 2, l - 3
    if label == "B5":
        return second - 1, g - 1, low, l, l - 2, l - 3
    if label == "B6":
        return second, 2, (low - 3) % g, l, l - 2, l - 3
    if label == "B7":
        return second, 1, 1, l, l - 2, l - 3
    raise ClassificationError(f"unknown type {label!r}")


def seed(tag: TypeTag, ds: DigitString) -> Seed:
    _check(ds)
    tag = TypeTag(tag)
    if tag not in matching_types(ds):
        raise ClassificationError(f"type {tag} does not apply to {ds}")
    x1, y1, z1, a, b, c = seed_values(tag.value, ds.digits, ds.base)
    pair = (1, x1) if tag.family == "B" else None
    return Seed(tag, x1, y1, z1, a, b, c, pair)


def special_flag(ds: DigitString, tag: TypeTag) -> SpecialFlag:
    """Special when p1 has even length 2m and n has a zero at position m-1 or m."""
    _check(ds)
    tag = TypeTag(tag)
    len1 = len(ds) - 1 if tag in (TypeTag.A5, TypeTag.A6) else len(ds)
    m = len1 // 2
    if len1 % 2:
        return SpecialFlag(False, m)
    d = ds.digits
    return SpecialFlag(d[m - 1] == 0 or d[m] == 0, m)
