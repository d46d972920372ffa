"""Powers of 2 and 3 as base-3/2 numerals, and the look-and-say variant
whose run counts are themselves written in base 3/2.

The numeral of 3^n is the numeral of 2^n with n zeros appended, since
multiplying by 3/2 appends a zero and 3^n = 2^n * (3/2)^n.
"""

from __future__ import annotations

from itertools import groupby

from .numerals import Numeral, encode_integer


class EmptyWord(ValueError):
    """Raised when a look-and-say step receives no digits."""


class UnparsableWord(ValueError):
    """Raised when a word cannot be read back as look-and-say output."""


def power_numeral(base_int: int, n: int) -> Numeral:
    """Numeral of base_int ** n for base_int 2 or 3."""
    if base_int not in (2, 3):
        raise ValueError("only powers of 2 and 3 are catalogued")
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    return encode_integer(base_int**n)


def power_numerals(base_int: int, count: int) -> list[Numeral]:
    return [power_numeral(base_int, n) for n in range(count)]


def run_lengths(word: str) -> list[tuple[int, str]]:
    """(run length, digit) pairs, left to right."""
    return [(len(list(g)), c) for c, g in groupby(word)]


def look_and_say_step(word: str) -> str:
    """Read off runs, writing each count as a base-3/2 numeral.

    A run of three is read "20 threes", which is what lets digits other
    than 0, 1, 2 never appear.
    """
    if not word:
        raise EmptyWord("nothing to read")
    if any(c not in "012" for c in word):
        raise ValueError(f"word {word!r} must use digits 0, 1, 2")
    parts: list[str] = []
    for count, digit in run_lengths(word):
        parts.append(str(encode_integer(count)))
        parts.append(digit)
    return "".join(parts)


def look_and_say_sequence(count: int, start: str = "1") -> list[str]:
    """First `count` terms starting from "1": 1, 11, 21, 1211, 111221, ..."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out: list[str] = []
    word = start
    for _ in range(count):
        out.append(word)
        word = look_and_say_step(word)
    return out


def invert_look_and_say(word: str) -> str:
    """Reconstruct the word a look-and-say term was read from.

    Parses greedily with the counting numerals 20, 2, 1 (longest
    first).  Raises UnparsableWord instead of guessing when a count
    starts with 0, a count dangles at the end, or two adjacent runs
    carry the same digit.
    """
    if not word:
        raise EmptyWord("nothing to invert")
    if any(c not in "012" for c in word):
        raise ValueError(f"word {word!r} must use digits 0, 1, 2")
    runs: list[tuple[int, str]] = []
    i = 0
    while i < len(word):
        if word[i] == "0":
            raise UnparsableWord(f"count starting with 0 at position {i}")
        if word.startswith("20", i):
            count, i = 3, i + 2
        else:
            count, i = int(word[i]), i + 1
        if i >= len(word):
            raise UnparsableWord("count with no digit at end of word")
        digit = word[i]
        i += 1
        if runs and runs[-1][1] == digit:
            raise UnparsableWord(f"adjacent runs of {digit} at position {i}")
        runs.append((count, digit))
    preimage = "".join(digit * count for count, digit in runs)
    if look_and_say_step(preimage) != word:
        raise UnparsableWord(f"{word!r} is not a look-and-say image")
    return preimage


def longest_runs(word: str) -> dict[str, int]:
    """Longest run length per digit occurring in the word."""
    out: dict[str, int] = {}
    for count, digit in run_lengths(word):
        out[digit] = max(out.get(digit, 0), count)
    return out
