import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palsum.digits import (
    DigitError,
    DigitString,
    add3,
    digit_residue,
    from_digits,
    is_palindrome,
    parse,
    render,
    subtract,
    to_digits,
)

PI = "314159265358979323846"


def D(text, g=10, radix=10):
    return parse(text, g, radix)


def test_parse_examples():
    assert parse("21", 10, 10).digits == (1, 2)
    pi = parse(PI, 10, 10)
    assert len(pi) == 21 and pi.msd() == [int(c) for c in PI]
    assert parse("100", 5, 10).digits == (0, 0, 4)


def test_render_examples():
    assert render(DigitString((1, 2), 10), 10) == "21"
    four = DigitString((0, 0, 4), 5)
    assert render(four, 5) == "400"
    assert render(four, 10) == "100"


def test_render_rejects_other_radix():
    with pytest.raises(DigitError):
        render(DigitString((1,), 5), 7)


def test_large_base_uses_dotted_fields():
    ds = DigitString.from_int(1000 * 1001 + 7, 1000)
    assert render(ds, 1000) == "1.1.7"
    assert parse("1.1.7", 1000, 1000) == ds


@pytest.mark.parametrize(
    "text, radix, where",
    [("12a4", 10, "position 2"), ("1x", 10, "position 1"), ("135", 5, "position 2"), ("", 10, "empty")],
)
def test_parse_errors_report_position(text, radix, where):
    with pytest.raises(DigitError, match=where):
        parse(text, 5, radix)


def test_parse_rejects_foreign_radix():
    with pytest.raises(DigitError):
        parse("12", 5, 7)


def test_digit_residue_examples():
    assert digit_residue(-3, 10) == 7
    assert digit_residue(4 - 5 - 1, 10) == 8
    assert digit_residue(17, 5) == 2


def test_is_palindrome_examples():
    assert is_palindrome(DigitString.from_int(0, 10))
    assert is_palindrome(D("210100100111001001012"))
    assert not is_palindrome(parse("10110000", 2, 2))


def test_add3_examples():
    assert add3(D("101"), D("99"), D("1")) == D("201")
    x = D("123456")
    assert add3(D("0"), D("0"), x) == x
    assert add3(D("210100100111001001012"), D("98639929400492993689"), D("5419235847485329145")) == D(PI)


def test_subtract_examples():
    assert subtract(D("12267420107203532444"), D("11000000000")) == D("12267420096203532444")
    x = D("98765")
    assert subtract(x, D("0")) == x
    assert subtract(parse("1000", 5, 5), parse("1", 5, 5)) == parse("444", 5, 5)


def test_subtract_underflow_and_base_mismatch():
    with pytest.raises(DigitError):
        subtract(D("5"), D("6"))
    with pytest.raises(DigitError):
        subtract(D("5"), DigitString.from_int(1, 7))
    with pytest.raises(DigitError):
        add3(D("5"), D("1"), DigitString.from_int(1, 7))


def test_canonical_form():
    assert DigitString.from_int(0, 7).digits == (0,)
    assert len(DigitString.from_int(0, 7)) == 1
    with pytest.raises(DigitError):
        DigitString((1, 0), 10)
    with pytest.raises(DigitError):
        DigitString((10,), 10)
    with pytest.raises(DigitError):
        DigitString((), 10)
    with pytest.raises(DigitError):
        DigitString((1,), 1)
    assert DigitString.from_msd([0, 0, 3, 1], 10).digits == (1, 3)


def test_conversion_across_chunk_boundaries():
    rng = random.Random(11)
    for g in list(range(2, 40)) + [63, 64, 65, 1000, 65536]:
        for bits in (1, 7, 59, 60, 61, 120, 700, 5000):
            v = rng.getrandbits(bits)
            d = to_digits(v, g)
            assert from_digits(d, g) == v
            assert all(0 <= x < g for x in d) and (d[-1] or v == 0)


def test_decimal_strings_beyond_default_int_limit():
    v = 7 ** 20000  # about 16900 decimal digits
    ds = DigitString.from_int(v, 10)
    assert int(ds) == v


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=16), st.data())
def test_round_trip_decimal(g, data):
    v = data.draw(st.integers(min_value=0, max_value=g**64 - 1))
    t = str(v)
    assert render(parse(t, g, 10), 10) == t


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=2, max_value=16), st.data())
def test_round_trip_own_radix(g, data):
    v = data.draw(st.integers(min_value=0, max_value=g**40))
    ds = DigitString.from_int(v, g)
    assert parse(render(ds, g), g, g) == ds


@settings(max_examples=200, deadline=None)
@given(
    st.integers(min_value=2, max_value=16),
    st.integers(min_value=0, max_value=2**256),
    st.integers(min_value=0, max_value=2**256),
    st.integers(min_value=0, max_value=2**256),
)
def test_add3_matches_native(g, a, b, c):
    s = add3(*(DigitString.from_int(v, g) for v in (a, b, c)))
    assert render(s, 10) == str(a + b + c)


@given(st.integers(min_value=2, max_value=50), st.data())
def test_digit_residue_range(g, data):
    a = data.draw(st.integers(min_value=-10 * g, max_value=10 * g))
    d = digit_residue(a, g)
    assert 0 <= d < g and (d - a) % g == 0


@given(st.integers(min_value=2, max_value=16), st.integers(min_value=0, max_value=10**30))
def test_palindrome_reversal_symmetry(g, v):
    ds = DigitString.from_int(v, g)
    rev = DigitString.from_msd(list(ds.digits), g)
    if ds.digits[0] != 0:  # reversal keeps the same length only without trailing zeros
        assert is_palindrome(ds) == is_palindrome(rev)
    assert is_palindrome(ds) == (ds == rev)
