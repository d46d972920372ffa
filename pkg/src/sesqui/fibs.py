"""Fibonacci-like digit dynamics in base 3/2.

Two maps act on pairs of digit words: the sorted step adds two words
digit by digit, carries in base 3/2, sorts the result ascending and
drops zeros (so a word is just a count of ones and twos); the reverse
step sorts descending and discards zeros.  Orbits either grow forever
in a two-steps-per-term staircase or fall into a three-term cycle, and
which of the four families occurs is decidable by direct iteration
with cycle detection.

The closed-form carry tables predict a step straight from the
pre-carry digit profile of the summed pair and are cross-checked
against the carry machine exhaustively in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import groupby
from typing import Iterable, Union

from .numerals import normalize


class InvalidProfile(ValueError):
    """Raised for pre-carry profiles no word pair can produce."""


class CapExceeded(RuntimeError):
    """Raised when classification runs out of steps; either the cap is
    too small for the start or an invariant is broken."""


@dataclass(frozen=True, slots=True)
class SortedWord:
    """Digits ascending: `ones` ones then `twos` twos; empty means zero."""

    ones: int
    twos: int

    def __post_init__(self) -> None:
        if self.ones < 0 or self.twos < 0:
            raise ValueError("digit counts must be nonnegative")

    @property
    def is_zero(self) -> bool:
        return self.ones == 0 and self.twos == 0

    @property
    def total_digits(self) -> int:
        return self.ones + self.twos

    def digits(self) -> list[int]:
        return [1] * self.ones + [2] * self.twos

    def __str__(self) -> str:
        return "1" * self.ones + "2" * self.twos if not self.is_zero else "0"


@dataclass(frozen=True, slots=True)
class ReverseWord:
    """Digits descending: `twos` twos then `ones` ones; empty means zero."""

    twos: int
    ones: int

    def __post_init__(self) -> None:
        if self.ones < 0 or self.twos < 0:
            raise ValueError("digit counts must be nonnegative")

    @property
    def is_zero(self) -> bool:
        return self.ones == 0 and self.twos == 0

    @property
    def total_digits(self) -> int:
        return self.ones + self.twos

    def digits(self) -> list[int]:
        return [2] * self.twos + [1] * self.ones

    def __str__(self) -> str:
        return "2" * self.twos + "1" * self.ones if not self.is_zero else "0"


def parse_sorted_word(text: str) -> SortedWord:
    if text == "0":
        return SortedWord(0, 0)
    if not text or text.strip("12") or "21" in text:
        raise ValueError(f"{text!r} is not ones-then-twos")
    return SortedWord(text.count("1"), text.count("2"))


def parse_reverse_word(text: str) -> ReverseWord:
    if text == "0":
        return ReverseWord(0, 0)
    if not text or text.strip("12") or "12" in text:
        raise ValueError(f"{text!r} is not twos-then-ones")
    return ReverseWord(text.count("2"), text.count("1"))


def _digit_sum(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    shift = len(out) - len(b)
    for i, d in enumerate(b):
        out[shift + i] += d
    return out


def _carry_counts(raw: Iterable[int]) -> tuple[int, int]:
    digits = normalize(raw).digits
    return digits.count(1), digits.count(2)


def sorted_fib_step(x: SortedWord, y: SortedWord) -> SortedWord:
    """Add, carry in base 3/2, sort ascending discarding zeros."""
    ones, twos = _carry_counts(_digit_sum(x.digits(), y.digits()))
    return SortedWord(ones, twos)


def reverse_fib_step(x: ReverseWord, y: ReverseWord) -> ReverseWord:
    """Add, carry in base 3/2, sort descending discarding zeros."""
    ones, twos = _carry_counts(_digit_sum(x.digits(), y.digits()))
    return ReverseWord(twos, ones)


# ---------------------------------------------------------------------------
# closed-form carry tables


@dataclass(frozen=True, slots=True)
class SortedBreakdown:
    """Pre-carry digit counts of a summed sorted pair: the digit sums of
    two ascending words always read 1..1 2..2 3..3 4..4."""

    ones: int
    twos: int
    threes: int
    fours: int

    def __post_init__(self) -> None:
        if min(self.ones, self.twos, self.threes, self.fours) < 0:
            raise InvalidProfile("block lengths must be nonnegative")

    def digits(self) -> list[int]:
        return (
            [1] * self.ones + [2] * self.twos + [3] * self.threes + [4] * self.fours
        )


def sorted_breakdown(x: SortedWord, y: SortedWord) -> SortedBreakdown:
    """Profile of the digitwise sum of two sorted words."""
    sums = _digit_sum(x.digits(), y.digits())
    counts = {v: 0 for v in (1, 2, 3, 4)}
    for v in sums:
        if v not in counts:
            raise InvalidProfile(f"unexpected pre-carry digit {v}")
        counts[v] += 1
    if sorted(sums) != sums:
        raise InvalidProfile("sorted pair must give ascending pre-carry digits")
    return SortedBreakdown(counts[1], counts[2], counts[3], counts[4])


def sorted_carry_table(p: SortedBreakdown) -> SortedWord:
    """Post-carry sorted word straight from the profile, no machine run.

    Five disjoint cases on (ones > 0, fours) cover every profile.
    """
    a, b, c, d = p.ones, p.twos, p.threes, p.fours
    if d > 1:
        if a > 0:
            return SortedWord(c + 1, d)
        return SortedWord(c + 2, d - 1)
    if d == 1:
        return SortedWord(b + 1, c + 1)
    if c > 0:
        return SortedWord(b, c)
    return SortedWord(a, b)


def realize_sorted_breakdown(p: SortedBreakdown) -> tuple[SortedWord, SortedWord]:
    """A pair of sorted words whose digitwise sum has profile p."""
    x = SortedWord(p.ones + p.twos + p.threes, p.fours)
    y = SortedWord(p.twos, p.threes + p.fours)
    return x, y


@dataclass(frozen=True, slots=True)
class ReverseBreakdown:
    """Pre-carry digit blocks of a summed reverse pair.

    When the shorter word's twos land on the longer word's ones the
    blocks read 2..2 1..1 3..3 2..2 (no overlap of twos); when they land
    on the longer word's twos they read 2..2 4..4 3..3 2..2
    (overlapping), which requires at least one 4.
    """

    head_twos: int
    middle: int
    threes: int
    tail_twos: int
    overlapping: bool

    def __post_init__(self) -> None:
        if min(self.head_twos, self.middle, self.threes, self.tail_twos) < 0:
            raise InvalidProfile("block lengths must be nonnegative")
        if self.overlapping and self.middle < 1:
            raise InvalidProfile("overlapping profile needs a block of fours")

    def digits(self) -> list[int]:
        mid = 4 if self.overlapping else 1
        return (
            [2] * self.head_twos
            + [mid] * self.middle
            + [3] * self.threes
            + [2] * self.tail_twos
        )


def reverse_breakdown(x: ReverseWord, y: ReverseWord) -> ReverseBreakdown:
    """Profile of the digitwise sum of two reverse words.

    The run values are matched greedily onto 2,1,3,2 (or 2,4,3,2 when a
    4 appears); a bare run of twos could sit at either end but the
    carry table gives the same answer for both placements.
    """
    sums = _digit_sum(x.digits(), y.digits())
    runs = [(v, len(list(g))) for v, g in groupby(sums)]
    overlapping = any(v == 4 for v, _ in runs)
    pattern = (2, 4, 3, 2) if overlapping else (2, 1, 3, 2)
    blocks = [0, 0, 0, 0]
    pos = 0
    for v, n in runs:
        while pos < 4 and pattern[pos] != v:
            pos += 1
        if pos == 4:
            raise InvalidProfile(f"pre-carry digits {sums} fit no reverse shape")
        blocks[pos] = n
        pos += 1
    return ReverseBreakdown(blocks[0], blocks[1], blocks[2], blocks[3], overlapping)


def reverse_carry_table(p: ReverseBreakdown) -> ReverseWord:
    """Post-carry reverse word straight from the profile.

    Two cases when the twos blocks do not overlap, four when they do.
    """
    a, b, c, d = p.head_twos, p.middle, p.threes, p.tail_twos
    if not p.overlapping:
        if c > 0:
            return ReverseWord(c + d, a)
        return ReverseWord(a + d, b)
    if b > 1:
        if c > 0:
            return ReverseWord(b + c + d - 1, 1)
        return ReverseWord(b + d - 1, 2)
    if c > 0:
        return ReverseWord(c + d, 1)
    return ReverseWord(d + 1, a + 1)


def realize_reverse_breakdown(p: ReverseBreakdown) -> tuple[ReverseWord, ReverseWord]:
    """A pair of reverse words whose digitwise sum has profile p."""
    a, b, c, d = p.head_twos, p.middle, p.threes, p.tail_twos
    if not p.overlapping:
        return ReverseWord(a, b + c + d), ReverseWord(c, d)
    return ReverseWord(a + b, c + d), ReverseWord(b + c, d)


# ---------------------------------------------------------------------------
# orbits


def pinocchio(count: int) -> list[SortedWord]:
    """The growing sorted orbit 0, 1, 1, 2, 2, 12, 12, 112, 112, ..."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    terms = [SortedWord(0, 0), SortedWord(1, 0)]
    while len(terms) < count:
        terms.append(sorted_fib_step(terms[-2], terms[-1]))
    return terms[:count]


def oihcconip(count: int, twos: int = 2) -> list[ReverseWord]:
    """The growing reverse orbit from a repeated 2..211 word.

    Terms come in equal pairs whose twos count climbs by one each pair.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if twos < 2:
        raise ValueError("the growing reverse pattern needs at least two twos")
    seed = ReverseWord(twos, 2)
    terms = [seed, seed]
    while len(terms) < count:
        terms.append(reverse_fib_step(terms[-2], terms[-1]))
    return terms[:count]


class BehaviorKind(str, Enum):
    PINOCCHIO_TAIL = "pinocchio_tail"
    SORTED_CYCLE = "sorted_cycle"
    REVERSE_CYCLE = "reverse_cycle"
    OIHCCONIP_TAIL = "oihcconip_tail"


@dataclass(frozen=True, slots=True)
class Behavior:
    """Eventual fate of an orbit.

    entry_index is the index of the first term inside the repeating or
    growing pattern; witness shows one period (cycles) or the first
    repeat-then-grow triple (tails); twos parametrizes the reverse
    families.
    """

    kind: BehaviorKind
    entry_index: int
    witness: tuple[str, ...]
    twos: Union[int, None] = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "entry_index": self.entry_index,
            "witness": list(self.witness),
            "twos": self.twos,
        }


_SORTED_CYCLE = (SortedWord(2, 1), SortedWord(2, 2), SortedWord(2, 2))


def default_cap(x0, y0) -> int:
    return 10 * (x0.total_digits + y0.total_digits) + 100


def classify_sorted(x0: SortedWord, y0: SortedWord, cap: int | None = None) -> Behavior:
    return _classify(x0, y0, sorted_fib_step, _sorted_tail, _sorted_cycle, cap)


def classify_reverse(
    x0: ReverseWord, y0: ReverseWord, cap: int | None = None
) -> Behavior:
    return _classify(x0, y0, reverse_fib_step, _reverse_tail, _reverse_cycle, cap)


def classify(mode: str, start: tuple[str, str], cap: int | None = None) -> Behavior:
    """Classify an orbit given words as text; mode is sorted or reverse."""
    if mode == "sorted":
        return classify_sorted(
            parse_sorted_word(start[0]), parse_sorted_word(start[1]), cap
        )
    if mode == "reverse":
        return classify_reverse(
            parse_reverse_word(start[0]), parse_reverse_word(start[1]), cap
        )
    raise ValueError(f"unknown mode {mode!r}")


def _sorted_tail(word: SortedWord) -> bool:
    return word.twos == 1


def _reverse_tail(word: ReverseWord) -> bool:
    return word.ones == 2 and word.twos >= 2


def _sorted_cycle(cycle: list[SortedWord], entry_index: int) -> Behavior:
    if len(cycle) == 3 and sorted(cycle, key=lambda w: w.twos) == list(_SORTED_CYCLE):
        witness = _rotate_cycle(cycle, lambda w: w.twos == 1, single_first=True)
        return Behavior(BehaviorKind.SORTED_CYCLE, entry_index, witness)
    raise CapExceeded(f"unrecognized sorted cycle {[str(w) for w in cycle]}")


def _reverse_cycle(cycle: list[ReverseWord], entry_index: int) -> Behavior:
    twos = cycle[0].twos
    expected = sorted([(twos, 1), (twos, 1), (twos, 2)])
    if (
        len(cycle) == 3
        and twos >= 2
        and sorted((w.twos, w.ones) for w in cycle) == expected
    ):
        witness = _rotate_cycle(cycle, lambda w: w.ones == 2, single_first=False)
        return Behavior(BehaviorKind.REVERSE_CYCLE, entry_index, witness, twos=twos)
    raise CapExceeded(f"unrecognized reverse cycle {[str(w) for w in cycle]}")


def _rotate_cycle(cycle, is_single, single_first: bool) -> tuple[str, ...]:
    (idx,) = [i for i, w in enumerate(cycle) if is_single(w)]
    start = idx if single_first else (idx + 1) % len(cycle)
    rotated = [cycle[(start + i) % len(cycle)] for i in range(len(cycle))]
    return tuple(str(w) for w in rotated)


def _classify(x0, y0, step, is_tail, cycle_behavior, cap: int | None) -> Behavior:
    if x0.is_zero and y0.is_zero:
        raise ValueError("the all-zero orbit has no classified behavior")
    if cap is None:
        cap = default_cap(x0, y0)
    terms = [x0, y0]
    visited = {(x0, y0): 1}
    if x0 == y0 and is_tail(x0):
        return _tail_behavior(terms, 0, step, is_tail)
    n = 1
    while n < cap:
        terms.append(step(terms[-2], terms[-1]))
        n += 1
        if terms[-2] == terms[-1] and is_tail(terms[-1]):
            return _tail_behavior(terms, n - 1, step, is_tail)
        state = (terms[-2], terms[-1])
        if state in visited:
            m = visited[state]
            cycle = terms[m - 1 : n - 1]
            return cycle_behavior(cycle, m - 1)
        visited[state] = n
    raise CapExceeded(f"no behavior within {cap} steps from ({x0}, {y0})")


def _tail_behavior(terms, entry_index: int, step, is_tail) -> Behavior:
    """Confirm the growing staircase for six further steps."""
    a, b = terms[-2], terms[-1]
    window = [a, b]
    for _ in range(6):
        window.append(step(window[-2], window[-1]))
    for i in range(0, 6, 2):
        grown, again = window[i + 2], window[i + 3]
        if not (grown == again and is_tail(grown) and grown.total_digits == window[i].total_digits + 1):
            raise CapExceeded(f"tail pattern broke after ({a}, {b})")
    kind = (
        BehaviorKind.PINOCCHIO_TAIL
        if isinstance(a, SortedWord)
        else BehaviorKind.OIHCCONIP_TAIL
    )
    twos = a.twos if kind is BehaviorKind.OIHCCONIP_TAIL else None
    witness = (str(a), str(b), str(window[2]))
    return Behavior(kind, entry_index, witness, twos=twos)


# ---------------------------------------------------------------------------
# exhaustive classification


@dataclass(frozen=True, slots=True)
class SummaryRow:
    kind: str
    twos: Union[int, None]
    count: int


@dataclass(frozen=True, slots=True)
class ClassificationSummary:
    mode: str
    max_total_digits: int
    total_pairs: int
    cap_exceeded: int
    rows: tuple[SummaryRow, ...]

    def to_csv(self) -> str:
        lines = ["kind,twos,count"]
        for row in self.rows:
            twos = "" if row.twos is None else str(row.twos)
            lines.append(f"{row.kind},{twos},{row.count}")
        lines.append(f"cap_exceeded,,{self.cap_exceeded}")
        return "\n".join(lines)


def _words_up_to(total: int, make) -> list:
    return [
        make(i, t - i) for t in range(total + 1) for i in range(t + 1)
    ]


def exhaustive_classification(
    mode: str, max_total_digits: int, cap: int | None = None
) -> ClassificationSummary:
    """Classify every start pair with combined digit count below the
    bound, excluding the all-zero pair; counts land per behavior family.
    """
    if mode == "sorted":
        make = lambda a, b: SortedWord(a, b)
        run = classify_sorted
    elif mode == "reverse":
        make = lambda a, b: ReverseWord(a, b)
        run = classify_reverse
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if max_total_digits < 0:
        raise ValueError("digit bound must be nonnegative")
    words = _words_up_to(max_total_digits, make)
    counts: dict[tuple[str, Union[int, None]], int] = {}
    total = 0
    exceeded = 0
    for x in words:
        room = max_total_digits - x.total_digits
        for y in words:
            if y.total_digits > room:
                continue
            if x.is_zero and y.is_zero:
                continue
            total += 1
            try:
                behavior = run(x, y, cap)
            except CapExceeded:
                exceeded += 1
                continue
            key = (behavior.kind.value, behavior.twos)
            counts[key] = counts.get(key, 0) + 1
    rows = tuple(
        SummaryRow(kind, twos, counts[(kind, twos)])
        for kind, twos in sorted(counts, key=lambda kt: (kt[0], kt[1] or 0))
    )
    return ClassificationSummary(mode, max_total_digits, total, exceeded, rows)
