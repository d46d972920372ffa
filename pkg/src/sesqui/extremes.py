"""Smallest and largest integers with a given digit count in base 3/2.

The smallest k-digit integer for k >= 2 follows the recurrence
next = 3a/2 for even a, 3(a+1)/2 for odd a (seeded with 1 the same
recurrence also produces the classical sequence 1, 3, 6, 9, 15, ...).
The largest k-digit integer is one less than the next smallest.  Even
counterparts obey next = 2*ceil(3s/4) and next = 2*floor(3l/4) + 2.

Every smaller extreme numeral is a prefix of the next one, so each
family defines an infinite digit stream; the smallest-even stream is
called evenberry and the largest-even stream evenmelon.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, Union

from .numerals import Numeral, encode_integer, parse_numeral


class MalformedInput(ValueError):
    """Raised when a word is not of the shape a transform requires."""


def iter_smallest_values(seed: int = 1) -> Iterator[int]:
    """1, 3, 6, 9, 15, 24, ...: scale by 3/2, rounding up to even first."""
    a = seed
    while True:
        yield a
        a = 3 * a // 2 if a % 2 == 0 else 3 * (a + 1) // 2


def iter_largest_values() -> Iterator[int]:
    """2, 5, 8, 14, 23, ...: largest k-digit integer, k = 1, 2, 3, ..."""
    it = iter_smallest_values()
    next(it)
    for s in it:
        yield s - 1


def iter_smallest_even_values() -> Iterator[int]:
    """2, 4, 6, 10, 16, 24, ...: smallest positive even with k digits."""
    a = 2
    while True:
        yield a
        a = 2 * ((3 * a + 3) // 4)


def iter_largest_even_values() -> Iterator[int]:
    """2, 4, 8, 14, 22, 34, ...: largest even with k digits."""
    a = 2
    while True:
        yield a
        a = 2 * (3 * a // 4) + 2


def smallest_with_digits(k: int) -> tuple[int, Numeral]:
    """The smallest integer whose numeral has exactly k digits.

    k = 1 gives 0 (numeral "0"); from k = 2 on the values are
    3, 6, 9, 15, 24, ... and each numeral starts 21 and ends in 0.
    """
    _check_k(k)
    if k == 1:
        return 0, encode_integer(0)
    value = next(islice(iter_smallest_values(), k - 1, None))
    return value, encode_integer(value)


def largest_with_digits(k: int) -> tuple[int, Numeral]:
    """The largest integer with exactly k digits: 2, 5, 8, 14, 23, ..."""
    _check_k(k)
    value = next(islice(iter_largest_values(), k - 1, None))
    return value, encode_integer(value)


def smallest_even_with_digits(k: int) -> tuple[int, Numeral]:
    _check_k(k)
    value = next(islice(iter_smallest_even_values(), k - 1, None))
    return value, encode_integer(value)


def largest_even_with_digits(k: int) -> tuple[int, Numeral]:
    _check_k(k)
    value = next(islice(iter_largest_even_values(), k - 1, None))
    return value, encode_integer(value)


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError("digit counts start at 1")


@dataclass(frozen=True, slots=True)
class DigitExtremes:
    """All four extreme integers sharing one digit count."""

    k: int
    smallest: int
    largest: int
    smallest_even: int
    largest_even: int
    smallest_numeral: str
    largest_numeral: str
    smallest_even_numeral: str
    largest_even_numeral: str


def extreme_table(k: int) -> DigitExtremes:
    s, sn = smallest_with_digits(k)
    l, ln = largest_with_digits(k)
    se, sen = smallest_even_with_digits(k)
    le, len_ = largest_even_with_digits(k)
    return DigitExtremes(k, s, l, se, le, str(sn), str(ln), str(sen), str(len_))


def smallest_to_largest_numeral(x: Union[Numeral, str]) -> Numeral:
    """Digit transform sending the smallest (k+1)-digit numeral to the
    largest k-digit numeral.

    "20" maps to "2"; longer smallest numerals look like 21...0 and map
    by dropping the frame digits 2 and 1, bumping every middle digit up
    by one and re-framing as 2...2.
    """
    numeral = parse_numeral(x) if isinstance(x, str) else x
    digits = numeral.digits
    if digits == (2, 0):
        return parse_numeral("2")
    if len(digits) < 3 or digits[0] != 2 or digits[1] != 1 or digits[-1] != 0:
        raise MalformedInput(f"{numeral} is not a smallest-integer numeral")
    middle = digits[2:-1]
    if any(d > 1 for d in middle):
        raise MalformedInput(f"{numeral} is not a smallest-integer numeral")
    return Numeral((2,) + tuple(d + 1 for d in middle) + (2,))


def evenberry_digits(n: int) -> str:
    """First n digits of the smallest-even stream: 2101100011...

    Digit k is the units digit (value mod 3) of the smallest even
    k-digit integer, and the length-k prefix is that integer's numeral.
    """
    if n < 0:
        raise ValueError("count must be nonnegative")
    return "".join(str(v % 3) for v in islice(iter_smallest_even_values(), n))


def evenmelon_digits(n: int) -> str:
    """First n digits of the largest-even stream: 2122111221..."""
    if n < 0:
        raise ValueError("count must be nonnegative")
    return "".join(str(v % 3) for v in islice(iter_largest_even_values(), n))


def melon_to_berry(melon: str) -> str:
    """Add-2 digit transform: leading 2 becomes 21 and every later digit
    drops by one, turning a largest-even stream prefix into a
    smallest-even stream prefix one digit longer."""
    if not melon or melon[0] != "2":
        raise MalformedInput("largest-even stream starts with digit 2")
    if any(c not in "12" for c in melon[1:]):
        raise MalformedInput("largest-even stream continues with digits 1 and 2")
    return "21" + "".join(str(int(c) - 1) for c in melon[1:])
