"""Divisibility tests readable directly off base-3/2 numerals.

Trailing zeros count exactly the factors of 3 in an integer, and the
alternating digit sum taken from the units end gives the residue mod 5
because the base ratio 3/2 is congruent to -1 mod 5.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .numerals import Numeral, NotAnInteger, decode, encode_integer, parse_numeral


@dataclass(frozen=True, slots=True)
class DivisibilityReport:
    n: int
    numeral: str
    trailing_zeros: int
    three_adic_valuation: int
    alt_digit_sum_mod5: int


def three_adic_valuation(n: int) -> int:
    """Largest k with 3^k dividing n."""
    if n < 1:
        raise ValueError("valuation defined for positive integers here")
    count = 0
    while n % 3 == 0:
        n //= 3
        count += 1
    return count


def trailing_zero_count(x: Numeral) -> int:
    digits = x.digits
    if x.is_zero:
        return 1
    count = 0
    for d in reversed(digits):
        if d != 0:
            break
        count += 1
    return count


def alternating_sum_mod5(x: Union[Numeral, str]) -> int:
    """Residue mod 5 of an integer-valued numeral from its digits alone.

    Alternates signs starting + at the units digit; works because each
    left shift multiplies the value by 3/2 = -1 (mod 5), 2 being
    invertible mod 5.
    """
    numeral = parse_numeral(x) if isinstance(x, str) else x
    if decode(numeral).denominator != 1:
        raise NotAnInteger(f"{numeral} does not denote an integer")
    total = 0
    sign = 1
    for d in reversed(numeral.digits):
        total += sign * d
        sign = -sign
    return total % 5


def report(n: int) -> DivisibilityReport:
    """Digit-based divisibility facts for a positive integer."""
    if n < 1:
        raise ValueError("report defined for positive integers")
    numeral = encode_integer(n)
    return DivisibilityReport(
        n=n,
        numeral=str(numeral),
        trailing_zeros=trailing_zero_count(numeral),
        three_adic_valuation=three_adic_valuation(n),
        alt_digit_sum_mod5=alternating_sum_mod5(numeral),
    )
