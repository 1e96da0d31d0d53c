import itertools
import random

import pytest

from palsum.classify import (
    ClassificationError,
    _conditions,
    TypeTag,
    classify,
    matching_types,
    seed,
    special_flag,
    type_of,
)
from palsum.digits import DigitString, parse

PI = parse("314159265358979323846", 10)
E = parse("2718281828459045235360", 10)
ZETA3 = parse("120205690315959428539", 10)
FIB = parse("12267420107203532444", 10)
FIB_SHIFTED = parse("12267420096203532444", 10)


def patterns(g, l=7, seed_=0):
    """One digit string per (top, second, third, low) with random middle."""
    rng = random.Random(seed_ * 1000 + g)
    for top, second, third, low in itertools.product(range(1, g), range(g), range(g), range(g)):
        mid = [rng.randrange(g) for _ in range(l - 4)]
        yield DigitString.from_msd([top, second, third] + mid + [low], g)


def test_worked_examples_types():
    # the pi digits satisfy the A3 row (second digit 1); its seed (2, 9, 5) is A3's
    assert classify(PI) is TypeTag.A3
    assert classify(E) is TypeTag.A1
    assert classify(ZETA3) is TypeTag.B5
    assert classify(FIB_SHIFTED) is TypeTag.B5


def test_pi_seed():
    s = seed(TypeTag.A3, PI)
    assert (s.x1, s.y1, s.z1) == (2, 9, 5)
    assert s.lengths == (21, 20, 19)
    assert s.leading_pair is None


def test_type_b_seeds():
    s = seed(TypeTag.B5, ZETA3)
    assert s.leading_pair == (1, 1) and (s.y1, s.z1) == (9, 9)
    assert s.lengths == (21, 19, 18)
    s = seed(TypeTag.B5, FIB_SHIFTED)
    assert s.leading_pair == (1, 1) and (s.y1, s.z1) == (9, 4)


def test_seed_rejects_wrong_tag():
    with pytest.raises(ClassificationError):
        seed(TypeTag.B1, PI)


def test_special_flag_examples():
    f = special_flag(FIB, classify(FIB))
    assert f.special and f.m == 10
    assert not special_flag(E, classify(E)).special
    odd = parse("1234567", 10)
    assert not special_flag(odd, classify(odd)).special


def test_classify_preconditions():
    with pytest.raises(ClassificationError):
        classify(parse("123456", 10))
    with pytest.raises(ClassificationError):
        classify(DigitString.from_int(4**8, 4))


def test_boundary_rule_routes_1_0_3_to_B2():
    for g in range(5, 11):
        ds = DigitString.from_msd([1, 0, 3, 2, 2, 2, 3], g)
        assert classify(ds) is TypeTag.B2


@pytest.mark.parametrize("g", range(5, 13))
def test_classifier_is_total(g):
    for ds in patterns(g):
        assert matching_types(ds), ds


@pytest.mark.parametrize("g", range(5, 13))
def test_table_overlaps_are_exactly_two_known_pairs(g):
    # the literal row conditions overlap in two places: B2/B7 (identical seeds)
    # and B4/B6; classification takes the first row in table order
    seen = set()
    for ds in patterns(g):
        tags = matching_types(ds)
        if len(tags) > 1:
            top, second, third = ds.msd()[:3]
            low = ds.digits[0]
            seen.add((tuple(t.value for t in tags), third, low))
            assert classify(ds) is tags[0]
            assert top == 1 and second in (1, 2)
    assert seen == {(("B2", "B7"), 3, 3), (("B4", "B6"), 3, 0)}


@pytest.mark.parametrize("g", [5, 7, 10, 16])
def test_seed_digits_valid_and_lengths_consistent(g):
    for ds in patterns(g, l=9):
        tag = classify(ds)
        s = seed(tag, ds)
        l = len(ds)
        for v in (s.x1, s.y1, s.z1):
            assert 0 <= v < g
        assert s.y1 >= 1
        if tag.family == "B":
            assert s.lengths == (l, l - 2, l - 3)
            assert s.leading_pair == (1, s.x1)
        else:
            assert s.x1 >= 1
            if tag in (TypeTag.A5, TypeTag.A6):
                assert s.lengths == (l - 1, l - 2, l - 3)
            else:
                assert s.lengths == (l, l - 1, l - 2)
        if s.z1 == 0:
            # only the rows whose residue condition is zero may start p3 at 0
            assert tag in (TypeTag.A2, TypeTag.A4, TypeTag.A6)


def test_special_flag_definition():
    rng = random.Random(5)
    for _ in range(3000):
        g = rng.randint(5, 12)
        l = rng.randint(7, 14)
        d = [rng.randint(1, g - 1)] + [rng.choice([0, rng.randrange(g)]) for _ in range(l - 1)]
        ds = DigitString.from_msd(d, g)
        tag = classify(ds)
        len1 = seed(tag, ds).len1
        f = special_flag(ds, tag)
        expect = len1 % 2 == 0 and 0 in (ds.digits[len1 // 2 - 1], ds.digits[len1 // 2])
        assert f.special == expect


@pytest.mark.parametrize("g", [5, 6, 7, 10, 13])
def test_fast_type_matches_table_order(g):
    for top, second, third, low in itertools.product(range(1, g), range(g), range(g), range(g)):
        d = [low, 0, 0, 0, third, second, top]
        first = next(label for label, holds in _conditions(d, g) if holds)
        assert type_of(d, g) == first
