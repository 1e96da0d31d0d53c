import csv

import pytest

from palsum.decompose import decompose
from palsum.digits import DigitError, DigitString, parse, render
from palsum.oracle import (
    brute_three,
    brute_three_int,
    brute_two,
    brute_two_int,
    count_two_sums,
    enumerate_palindromes,
    family_count_below,
    family_members,
    palindrome_count,
    two_sum_table,
    write_counts_csv,
)


def test_enumerate_palindromes_examples():
    assert [int(p) for p in enumerate_palindromes(1, 5)] == [1, 2, 3, 4]
    assert [int(p) for p in enumerate_palindromes(2, 10)] == [11 * k for k in range(1, 10)]
    four = list(enumerate_palindromes(4, 10))
    assert len(four) == 90 == palindrome_count(4, 10)
    assert all(p.digits == p.digits[::-1] and len(p) == 4 for p in four)
    assert [int(p) for p in four] == sorted(int(p) for p in four)


@pytest.mark.parametrize("g", [2, 3, 5, 10])
def test_palindrome_count_formula(g):
    for l in range(1, 7):
        assert sum(1 for _ in enumerate_palindromes(l, g)) == palindrome_count(l, g)


def test_brute_two_examples():
    assert brute_two(DigitString.from_int(201, 10)) is None
    assert brute_two(DigitString.from_int(9909, 10)) is None
    pair = brute_two(DigitString.from_int(22, 10))
    assert [int(p) for p in pair] == [22, 0]
    assert brute_two_int(22, 10, allow_zero=False) == (11, 11)


def test_brute_three_examples():
    assert brute_three(parse("10110000", 2, 2)) is None
    t = brute_three(DigitString.from_int(12321, 10))
    assert sum(int(p) for p in t) == 12321
    assert brute_three_int(12321, 10)[0] == 12321


def test_oracle_agrees_with_construction_base5():
    for n in range(1, 5**6):
        assert brute_three_int(n, 5) is not None
        decompose(n, base=5)


def test_count_two_sums_examples():
    assert count_two_sums(10, 10) == 10
    # frozen sieve value; below 10**6 minus the family members
    c = count_two_sums(10**6, 10)
    assert c == 733052
    assert c <= 10**6 - family_count_below(10**6, 10)


@pytest.mark.parametrize("g", [5, 10])
@pytest.mark.parametrize("allow_zero", [True, False])
def test_sieve_matches_per_number_search(g, allow_zero):
    limit = g**4 if g == 10 else g**5
    mark = two_sum_table(limit, g, allow_zero)
    for n in range(1, limit + 1):
        assert bool(mark[n]) == (brute_two_int(n, g, allow_zero) is not None), n


def test_family_members_examples():
    assert [int(x) for x in family_members(4, 10)] == [9909]
    assert [render(x, 10) for x in family_members(5, 10)] == [f"99{k}09" for k in range(10)]
    five = list(family_members(5, 5))
    assert len(five) == 5
    assert all(brute_two(x) is None for x in five)
    with pytest.raises(DigitError):
        list(family_members(3, 10))


def test_family_not_two_palindromes_small_lengths():
    for g in range(3, 11):
        for l in range(4, 7):
            for x in family_members(l, g):
                v = int(x)
                assert brute_two_int(v, g, True) is None
                assert brute_two_int(v, g, False) is None


def test_write_counts_csv(tmp_path):
    path = tmp_path / "counts.csv"
    write_counts_csv(path, [(100, 10, count_two_sums(100, 10))])
    rows = list(csv.reader(open(path)))
    assert rows[0] == ["n_limit", "base", "count"]
    assert rows[1][:2] == ["100", "10"]
