"""Write any positive integer as a sum of three base-g palindromes (g >= 5)."""

from .classify import ClassificationError, Seed, SpecialFlag, TypeTag, classify, matching_types, seed, special_flag
from .construct import ConstructionError, InvariantError, ThreeConfig, WorkState, run_I, run_II, run_III, run_IV
from .decompose import Decomposition, Provenance, check_range, decompose, verify
from .digits import DigitError, DigitString, add3, digit_residue, is_palindrome, parse, render, subtract
from .oracle import brute_three, brute_two, count_two_sums, enumerate_palindromes, family_members, palindrome_count
from .small import SmallCase, SmallCaseError, decompose_small
from .special import SpecialReduction, run_V

__all__ = [
    "ClassificationError", "ConstructionError", "Decomposition", "DigitError", "DigitString",
    "InvariantError", "Provenance", "Seed", "SmallCase", "SmallCaseError", "SpecialFlag",
    "SpecialReduction", "ThreeConfig", "TypeTag", "WorkState",
    "add3", "brute_three", "brute_two", "check_range", "classify", "count_two_sums",
    "decompose", "decompose_small", "digit_residue", "enumerate_palindromes", "family_members",
    "is_palindrome", "matching_types", "palindrome_count", "parse", "render", "run_I", "run_II",
    "run_III", "run_IV", "run_V", "seed", "special_flag", "subtract", "verify",
]
