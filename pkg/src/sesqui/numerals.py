"""Exact positional numeration in fractional bases p/q.

The carry machine is the "exploding dots" rule: p dots in a box are
removed and q dots appear in the box to the left.  With p=3, q=2 the
position weights are powers of 3/2 and every nonnegative integer has a
unique numeral over the digits {0, 1, 2} with no leading zeros.

Values are exact: decoding produces a `fractions.Fraction` whose
denominator always divides a power of q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union


class NotAnInteger(ValueError):
    """Raised when an operation requires an integer-valued numeral."""


class TooShort(ValueError):
    """Raised when a numeral has too few digits for the operation."""


@dataclass(frozen=True, slots=True)
class BaseSpec:
    """A fractional base numerator/denominator.

    An explosion consumes `numerator` dots from a box and deposits
    `denominator` dots one box to the left, so the base value is
    numerator/denominator.
    """

    numerator: int = 3
    denominator: int = 2

    def __post_init__(self) -> None:
        if self.numerator <= self.denominator or self.denominator < 1:
            raise ValueError("base requires numerator > denominator >= 1")
        if gcd(self.numerator, self.denominator) != 1:
            raise ValueError("base numerator and denominator must be coprime")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


THREE_HALVES = BaseSpec(3, 2)


@dataclass(frozen=True, slots=True)
class Numeral:
    """A canonical digit word: all digits < numerator, no leading zeros.

    The zero numeral is the single digit 0.  Digits are stored most
    significant first.
    """

    digits: tuple[int, ...]
    base: BaseSpec = THREE_HALVES

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise ValueError("numeral needs at least one digit")
        p = self.base.numerator
        for d in self.digits:
            if not (0 <= d < p):
                raise ValueError(f"digit {d} out of range for base {self.base}")
        if self.digits[0] == 0 and len(self.digits) > 1:
            raise ValueError("leading zero in numeral")

    @property
    def is_zero(self) -> bool:
        return self.digits == (0,)

    def __str__(self) -> str:
        return "".join(str(d) for d in self.digits)

    def __len__(self) -> int:
        return len(self.digits)


def parse_numeral(text: str, base: BaseSpec = THREE_HALVES) -> Numeral:
    """Parse a digit string like "2102" into a canonical numeral.

    Only characters '0'..'9' are accepted and every digit must be a
    valid canonical digit for the base.
    """
    if not text:
        raise ValueError("empty digit string")
    if not text.isdigit():
        raise ValueError(f"invalid digit string {text!r}")
    digits = tuple(int(c) for c in text)
    return Numeral(digits, base)


def parse_raw_digits(text: str) -> tuple[int, ...]:
    """Parse a digit string without canonicality checks (machine states)."""
    if not text:
        raise ValueError("empty digit string")
    if not text.isdigit():
        raise ValueError(f"invalid digit string {text!r}")
    return tuple(int(c) for c in text)


def encode_integer(n: int, base: BaseSpec = THREE_HALVES) -> Numeral:
    """Canonical numeral of a nonnegative integer.

    Peels the units digit n mod p and continues with q * (n // p); this
    inverts the left-shift relation between an integer and its prefix.
    """
    if n < 0:
        raise ValueError("only nonnegative integers have numerals here")
    p, q = base.numerator, base.denominator
    if n == 0:
        return Numeral((0,), base)
    rev: list[int] = []
    while n:
        n, d = divmod(n, p)
        rev.append(d)
        n *= q
    return Numeral(tuple(reversed(rev)), base)


def decode(x: Union[Numeral, Sequence[int]], base: BaseSpec | None = None) -> Fraction:
    """Exact value of a digit word; canonicality is not required.

    Raw machine states (digits >= p) decode too, which is what makes
    normalization value-preservation testable.
    """
    if isinstance(x, Numeral):
        digits: Sequence[int] = x.digits
        b = x.base
    else:
        digits = tuple(x)
        b = base if base is not None else THREE_HALVES
    if not digits:
        return Fraction(0)
    ratio = b.ratio
    value = Fraction(0)
    for d in digits:
        if d < 0:
            raise ValueError("digits must be nonnegative")
        value = value * ratio + d
    return value


def decode_integer(x: Union[Numeral, Sequence[int]], base: BaseSpec | None = None) -> int:
    """Exact integer value; raises NotAnInteger for fractional words."""
    value = decode(x, base)
    if value.denominator != 1:
        raise NotAnInteger(f"value {value} is not an integer")
    return value.numerator


def normalize(digits: Iterable[int], base: BaseSpec = THREE_HALVES) -> Numeral:
    """Run the carry machine to its fixpoint and strip leading zeros.

    One right-to-left pass suffices: a box holding v dots explodes
    v // p times at once, sending q * (v // p) dots left.  Carries past
    the leftmost box extend the word.  The result is independent of
    explosion order (tested as a confluence property).
    """
    p, q = base.numerator, base.denominator
    raw = list(digits)
    out: list[int] = []
    carry = 0
    for v in reversed(raw):
        if v < 0:
            raise ValueError("digits must be nonnegative")
        v += carry
        carry = q * (v // p)
        out.append(v % p)
    while carry:
        out.append(carry % p)
        carry = q * (carry // p)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    if not out:
        out = [0]
    return Numeral(tuple(reversed(out)), base)


def add(a: Numeral, b: Numeral) -> Numeral:
    """Digitwise sum aligned at the units box, then normalize."""
    if a.base != b.base:
        raise ValueError("cannot add numerals in different bases")
    da, db = a.digits, b.digits
    if len(da) < len(db):
        da, db = db, da
    shift = len(da) - len(db)
    summed = list(da)
    for i, d in enumerate(db):
        summed[shift + i] += d
    return normalize(summed, a.base)


def append_zero(x: Numeral) -> Numeral:
    """Shift left one position: multiplies the value by the base ratio.

    Appending to the zero numeral yields zero again.
    """
    if x.is_zero:
        return x
    return Numeral(x.digits + (0,), x.base)


def remove_last_digit(x: Numeral) -> Numeral:
    """Drop the units digit of an integer-valued numeral.

    For value n in base p/q the prefix is the numeral of q * (n // p).
    """
    if len(x.digits) < 2:
        raise TooShort("need at least two digits to drop one")
    if decode(x).denominator != 1:
        raise NotAnInteger("prefix law only applies to integer numerals")
    return Numeral(x.digits[:-1], x.base)


def digit_count(n: int, base: BaseSpec = THREE_HALVES) -> int:
    """Number of digits in the canonical numeral of n."""
    return len(encode_integer(n, base).digits)
