"""Base-g integers as explicit digit sequences.

Digits are stored least-significant first, so ``ds.digits[i]`` is the
coefficient of ``g**i``. Zero is the single digit ``(0,)``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache

MAX_BASE = 1 << 16

_ALPHABET = string.digits + string.ascii_lowercase


class DigitError(ValueError):
    """Raised for malformed digit strings or invalid arithmetic requests."""


@dataclass(frozen=True)
class DigitString:
    digits: tuple[int, ...]
    base: int

    def __post_init__(self):
        g = self.base
        if not isinstance(g, int) or g < 2 or g > MAX_BASE:
            raise DigitError(f"base must be an integer in [2, {MAX_BASE}], got {g!r}")
        d = self.digits
        if not d:
            raise DigitError("empty digit sequence; zero is written as (0,)")
        for i, v in enumerate(d):
            if not 0 <= v < g:
                raise DigitError(f"digit {v} at position {i} out of range for base {g}")
        if len(d) > 1 and d[-1] == 0:
            raise DigitError("leading zero in non-canonical digit string")

    @classmethod
    def from_int(cls, value: int, base: int) -> "DigitString":
        if value < 0:
            raise DigitError("negative values are not representable")
        return cls(tuple(to_digits(value, base)), base)

    @classmethod
    def from_msd(cls, digits, base: int) -> "DigitString":
        """Build from digits written most-significant first (as printed)."""
        d = list(digits)[::-1]
        while len(d) > 1 and d[-1] == 0:
            d.pop()
        return cls(tuple(d) if d else (0,), base)

    def __int__(self) -> int:
        return from_digits(self.digits, self.base)

    @property
    def value(self) -> int:
        return int(self)

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> int:
        return self.digits[i]

    def msd(self) -> list[int]:
        return list(reversed(self.digits))

    def is_zero(self) -> bool:
        return self.digits == (0,)

    def __str__(self) -> str:
        return render(self, self.base)


_ASCII = bytes(b"0123456789abcdefghijklmnopqrstuvwxyz".ljust(256, b"?"))


_FROM_ASCII = bytes.maketrans(b"0123456789abcdef", bytes(range(16)))
_FORMATS = {2: "b", 8: "o", 10: "d", 16: "x"}


@lru_cache(maxsize=64)
def _chunk(g):
    """(q, g**q, table, k, g**k): blocks of q digits are looked up in
    ``table`` (None for large g); bignum divmods peel off k digits at a time."""
    q = 1
    while g ** (q + 1) <= 4096:
        q += 1
    table = None
    if q > 1:
        table = []
        for v in range(g**q):
            digs = []
            for _ in range(q):
                v, r = divmod(v, g)
                digs.append(r)
            table.append(tuple(digs))
    k = q
    while g ** (k + q) < 1 << 60:
        k += q
    return q, g**q, table, k, g**k


def to_digits(value: int, g: int) -> list[int]:
    """Little-endian digits of a non-negative int; ``[0]`` for zero."""
    if value == 0:
        return [0]
    spec = _FORMATS.get(g)
    if spec and value < 1 << 12000:  # str() is capped near 4300 decimal digits
        return list(format(value, spec)[::-1].encode().translate(_FROM_ASCII))
    out = []
    q, small, table, k, big = _chunk(g)
    if table is not None:
        while value >= big:
            value, r = divmod(value, big)
            for _ in range(k // q):
                r, b = divmod(r, small)
                out.extend(table[b])
        while value >= small:
            value, b = divmod(value, small)
            out.extend(table[b])
    while value:
        value, r = divmod(value, g)
        out.append(r)
    return out


def from_digits(digits, g: int) -> int:
    """Value of little-endian ``digits``."""
    if g <= 36 and 16 < len(digits) < 4000:
        return int(bytes(reversed(digits)).translate(_ASCII), g)
    if len(digits) <= 16:
        v = 0
        for d in reversed(digits):
            v = v * g + d
        return v
    _, _, _, k, big = _chunk(g)
    v = 0
    top = len(digits) % k or k
    for d in reversed(digits[len(digits) - top :]):
        v = v * g + d
    for end in range(len(digits) - top, 0, -k):
        w = 0
        for d in reversed(digits[end - k : end]):
            w = w * g + d
        v = v * big + w
    return v


def digit_residue(a: int, base: int) -> int:
    """The digit d in [0, g-1] with d = a (mod g); written D(a) in the tables."""
    return a % base


def _digit_char(d: int) -> str:
    return _ALPHABET[d]


def render(ds: DigitString, radix: int | None = None) -> str:
    """Most-significant-first text in ``radix`` (10 or the string's own base).

    Bases up to 36 use ``0-9a-z``; larger bases print digits in decimal
    separated by ``.``.
    """
    g = ds.base
    if radix is None:
        radix = g
    if radix not in (10, g):
        raise DigitError(f"radix must be 10 or {g}, got {radix}")
    if radix == g:
        if g <= 36:
            return "".join(_digit_char(d) for d in reversed(ds.digits))
        return ".".join(str(d) for d in reversed(ds.digits))
    return str(int(ds))


def parse(text: str, base: int, text_radix: int = 10) -> DigitString:
    """Parse ``text`` written in ``text_radix`` into a base-``base`` DigitString."""
    if text_radix not in (10, base):
        raise DigitError(f"text radix must be 10 or {base}, got {text_radix}")
    text = text.strip()
    if not text:
        raise DigitError("empty number")
    if text_radix == base and base > 36:
        parts = text.split(".")
        digits = []
        for pos, part in enumerate(parts):
            if not part.isdigit():
                raise DigitError(f"invalid digit field {part!r} at field {pos}")
            v = int(part)
            if v >= base:
                raise DigitError(f"digit {v} at field {pos} not valid in base {base}")
            digits.append(v)
        return DigitString.from_msd(digits, base)
    radix = text_radix
    digits = []
    for pos, ch in enumerate(text.lower()):
        v = _ALPHABET.find(ch)
        if v < 0:
            raise DigitError(f"invalid character {ch!r} at position {pos}")
        if v >= radix:
            raise DigitError(f"digit {ch!r} at position {pos} not valid in radix {radix}")
        digits.append(v)
    if radix == base:
        return DigitString.from_msd(digits, base)
    return DigitString.from_int(int(text, 10), base)


def is_palindrome(ds: DigitString) -> bool:
    d = ds.digits
    return d == d[::-1]


def _check_same_base(*items: DigitString) -> int:
    g = items[0].base
    for it in items[1:]:
        if it.base != g:
            raise DigitError(f"base mismatch: {g} vs {it.base}")
    return g


def add_digits(rows, g: int) -> list[int]:
    """Column-wise sum of little-endian digit lists with carry propagation."""
    width = max(len(r) for r in rows)
    out = []
    carry = 0
    for i in range(width):
        s = carry
        for r in rows:
            if i < len(r):
                s += r[i]
        carry, d = divmod(s, g)
        out.append(d)
    while carry:
        carry, d = divmod(carry, g)
        out.append(d)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def add3(a: DigitString, b: DigitString, c: DigitString) -> DigitString:
    g = _check_same_base(a, b, c)
    return DigitString(tuple(add_digits((a.digits, b.digits, c.digits), g)), g)


def subtract(a: DigitString, b: DigitString) -> DigitString:
    """a - b with borrow propagation; requires a >= b."""
    g = _check_same_base(a, b)
    x, y = a.digits, b.digits
    if len(y) > len(x):
        raise DigitError("subtraction underflow")
    out = []
    borrow = 0
    for i in range(len(x)):
        d = x[i] - borrow - (y[i] if i < len(y) else 0)
        if d < 0:
            d += g
            borrow = 1
        else:
            borrow = 0
        out.append(d)
    if borrow:
        raise DigitError("subtraction underflow")
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return DigitString(tuple(out), g)
