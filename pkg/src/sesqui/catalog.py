"""Registry of the catalogued integer sequences and the b-file harness.

Each descriptor knows its OEIS-style name, its first index, which forms
it can emit (digit numerals or base-10 values) and a short known-good
prefix used by the self tests.  b-files are the plain-text OEIS format,
one "index value" pair per line with '#' comments.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Callable, Iterable, Union

from . import ap3, even_tree, extremes, fibs, sequences
from .numerals import encode_integer

Term = Union[int, str]


class UnknownSequence(KeyError):
    """Raised for names absent from the registry."""


class ParseError(ValueError):
    """Raised for b-file lines that cannot be read."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class NonMonotonicIndex(ValueError):
    """Raised when b-file indices fail to increase."""


@dataclass(frozen=True, slots=True)
class SequenceDescriptor:
    name: str
    description: str
    first_index: int
    forms: tuple[str, ...]
    producers: dict[str, Callable[[int], list[Term]]]
    known_prefix: tuple[str, ...]

    @property
    def default_form(self) -> str:
        return self.forms[0]

    def emit(self, count: int, form: str | None = None) -> list[str]:
        if count < 0:
            raise ValueError("count must be nonnegative")
        form = form or self.default_form
        if form not in self.producers:
            raise ValueError(f"{self.name} has no {form!r} form")
        return [str(t) for t in self.producers[form](count)]


def _take(it_factory: Callable[[], Iterable[int]]) -> Callable[[int], list[Term]]:
    return lambda count: list(islice(it_factory(), count))


def _numerals_of(values: Callable[[int], list[Term]]) -> Callable[[int], list[Term]]:
    return lambda count: [str(encode_integer(int(v))) for v in values(count)]


def _digit_counts(count: int) -> list[Term]:
    return [len(str(encode_integer(n))) for n in range(count)]


def _integer_numerals(count: int) -> list[Term]:
    return [str(encode_integer(n)) for n in range(count)]


def _smallest_values(count: int) -> list[Term]:
    return [extremes.smallest_with_digits(k)[0] for k in range(1, count + 1)]


def _stream_digits(stream: Callable[[int], str]) -> Callable[[int], list[Term]]:
    return lambda count: [int(c) for c in stream(count)]


def _pinocchio_words(count: int) -> list[Term]:
    return [str(w) for w in fibs.pinocchio(count)]


def _look_and_say(count: int) -> list[Term]:
    return sequences.look_and_say_sequence(count)


def _twice_halved(count: int) -> list[Term]:
    # ceil(3a/2) recurrence from 1; doubling it gives the smallest-even values
    out: list[Term] = []
    a = 1
    for _ in range(count):
        out.append(a)
        a = (3 * a + 1) // 2
    return out


def _descriptor(
    name: str,
    description: str,
    first_index: int,
    producers: dict[str, Callable[[int], list[Term]]],
    known_prefix: Iterable[Term],
) -> SequenceDescriptor:
    return SequenceDescriptor(
        name=name,
        description=description,
        first_index=first_index,
        forms=tuple(producers),
        producers=producers,
        known_prefix=tuple(str(t) for t in known_prefix),
    )


def _build_registry() -> dict[str, SequenceDescriptor]:
    smallest_even = _take(extremes.iter_smallest_even_values)
    largest_even = _take(extremes.iter_largest_even_values)
    largest = _take(extremes.iter_largest_values)
    entries = [
        _descriptor(
            "a024629",
            "nonnegative integers written in base 3/2",
            0,
            {"numeral": _integer_numerals, "value": lambda c: list(range(c))},
            ["0", "1", "2", "20", "21", "22", "210", "211", "212",
             "2100", "2101", "2102", "2120"],
        ),
        _descriptor(
            "a246435",
            "digit count of n in base 3/2",
            0,
            {"value": _digit_counts},
            [1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 4],
        ),
        _descriptor(
            "a005428",
            "level sizes of the even-integer tree",
            0,
            {"value": lambda c: even_tree.level_counts(c)},
            [1, 1, 2, 3, 4, 6, 9, 14, 21, 31, 47, 70],
        ),
        _descriptor(
            "a073941",
            "level sizes of the even-integer tree, with an extra leading 1",
            1,
            {"value": lambda c: ([1] + even_tree.level_counts(max(c - 1, 0)))[:c]},
            [1, 1, 1, 2, 3, 4, 6, 9, 14, 21, 31, 47, 70],
        ),
        _descriptor(
            "a081848",
            "how many integers have exactly k digits in base 3/2",
            1,
            {"value": lambda c: even_tree.integers_with_k_digits(c)},
            [3, 3, 3, 6, 9, 12, 18, 27, 42, 63, 93, 141, 210],
        ),
        _descriptor(
            "a070885",
            "scale by 3/2 rounding odd terms up, from 1",
            1,
            {"value": _take(extremes.iter_smallest_values)},
            [1, 3, 6, 9, 15, 24, 36, 54, 81, 123, 186, 279, 420, 630, 945],
        ),
        _descriptor(
            "a304023",
            "smallest integer with k digits, as a base-3/2 numeral",
            1,
            {"numeral": _numerals_of(_smallest_values), "value": _smallest_values},
            ["0", "20", "210", "2100", "21010", "210110", "2101100",
             "21011000", "210110000"],
        ),
        _descriptor(
            "a304024",
            "largest integer with k digits, as a base-3/2 numeral",
            1,
            {"numeral": _numerals_of(largest), "value": largest},
            ["2", "22", "212", "2122", "21222", "212212", "2122112",
             "21221112"],
        ),
        _descriptor(
            "a304025",
            "largest integer with k digits",
            1,
            {"value": largest},
            [2, 5, 8, 14, 23, 35, 53, 80],
        ),
        _descriptor(
            "a303500",
            "smallest even integer with k digits, as a base-3/2 numeral",
            1,
            {"numeral": _numerals_of(smallest_even), "value": smallest_even},
            ["2", "21", "210", "2101", "21011", "210110", "2101100",
             "21011000", "210110001"],
        ),
        _descriptor(
            "a305498",
            "smallest even integer with k digits",
            1,
            {"value": smallest_even},
            [2, 4, 6, 10, 16, 24, 36, 54, 82],
        ),
        _descriptor(
            "a304272",
            "largest even integer with k digits, as a base-3/2 numeral",
            1,
            {"numeral": _numerals_of(largest_even), "value": largest_even},
            ["2", "21", "212", "2122", "21221", "212211", "2122111",
             "21221112", "212211122"],
        ),
        _descriptor(
            "a305497",
            "largest even integer with k digits",
            1,
            {"value": largest_even},
            [2, 4, 8, 14, 22, 34, 52, 80],
        ),
        _descriptor(
            "a304273",
            "the evenberry stream: digits of the ultimate smallest even integer",
            1,
            {"value": _stream_digits(extremes.evenberry_digits)},
            list("2101100011010011010100110100101000"),
        ),
        _descriptor(
            "a304274",
            "the evenmelon stream: digits of the ultimate largest even integer",
            1,
            {"value": _stream_digits(extremes.evenmelon_digits)},
            # the last digit of the 33-digit published prefix is a known
            # misprint: the add-2 relation and the boundary scan force 1
            list("212211122121122121211221211212111"),
        ),
        _descriptor(
            "a061419",
            "scale by 3/2 rounding up, from 1; half the smallest-even values",
            1,
            {"value": _twice_halved},
            [1, 2, 3, 5, 8, 12, 18, 27, 41],
        ),
        _descriptor(
            "a005836",
            "integers with no 2 in ternary; class 0 of the greedy partition",
            1,
            {"value": lambda c: ap3.no_two_in_ternary(c)},
            [0, 1, 3, 4, 9, 10, 12],
        ),
        _descriptor(
            "a006997",
            "greedy AP3-free partition class of n",
            0,
            {"value": lambda c: [ap3.class_index(n) for n in range(c)]},
            [0, 0, 1, 0, 0, 1, 1, 2, 2, 0, 0],
        ),
        _descriptor(
            "a006999",
            "greedy partition class of 3^n - 1; half the largest-even values",
            0,
            {"value": lambda c: [ap3.all_twos_class(n) for n in range(c)]},
            [0, 1, 2, 4, 7, 11, 17, 26, 40],
        ),
        _descriptor(
            "a305658",
            "powers of 3 written in base 3/2",
            0,
            {"numeral": lambda c: [str(w) for w in sequences.power_numerals(3, c)],
             "value": lambda c: [3**n for n in range(c)]},
            ["1", "20", "2100", "212000", "210110000", "21202200000",
             "21200101000000"],
        ),
        _descriptor(
            "a305659",
            "powers of 2 written in base 3/2",
            0,
            {"numeral": lambda c: [str(w) for w in sequences.power_numerals(2, c)],
             "value": lambda c: [2**n for n in range(c)]},
            ["1", "2", "21", "212", "21011", "212022", "21200101",
             "2101100202", "21202202121"],
        ),
        _descriptor(
            "a305660",
            "look-and-say with counts written in base 3/2",
            1,
            {"numeral": _look_and_say},
            ["1", "11", "21", "1211", "111221", "2012211", "1210112221"],
        ),
        _descriptor(
            "a305753",
            "the growing sorted-Fibs orbit from 0, 1",
            0,
            {"numeral": _pinocchio_words},
            ["0", "1", "1", "2", "2", "12", "12", "112", "112", "1112",
             "1112", "11112"],
        ),
    ]
    return {d.name: d for d in entries}


REGISTRY: dict[str, SequenceDescriptor] = _build_registry()

ALIASES: dict[str, str] = {
    "smallest-kdigit": "a304023",
    "largest-kdigit": "a304024",
    "smallest-even": "a303500",
    "largest-even": "a304272",
    "evenberry": "a304273",
    "evenmelon": "a304274",
    "powers3": "a305658",
    "powers2": "a305659",
    "look-and-say": "a305660",
    "pinocchio": "a305753",
}


def resolve(name: str) -> SequenceDescriptor:
    key = name.lower()
    key = ALIASES.get(key, key)
    try:
        return REGISTRY[key]
    except KeyError:
        raise UnknownSequence(name) from None


def sequence_names() -> list[str]:
    return sorted(REGISTRY) + sorted(ALIASES)


def emit_sequence(name: str, count: int, form: str | None = None) -> list[str]:
    return resolve(name).emit(count, form)


# ---------------------------------------------------------------------------
# b-files


@dataclass(frozen=True, slots=True)
class BFileEntry:
    index: int
    value: int


@dataclass(frozen=True, slots=True)
class Mismatch:
    index: int
    expected: int | None
    found: int


@dataclass(frozen=True, slots=True)
class VerificationReport:
    name: str
    compared: int
    matched: int
    mismatch: Mismatch | None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def to_dict(self) -> dict:
        out: dict = {
            "name": self.name,
            "compared": self.compared,
            "matched": self.matched,
            "ok": self.ok,
        }
        if self.mismatch is not None:
            out["mismatch"] = {
                "index": self.mismatch.index,
                "expected": self.mismatch.expected,
                "found": self.mismatch.found,
            }
        return out


def parse_bfile_text(text: str) -> list[BFileEntry]:
    """Parse b-file content: "index value" lines, '#' comments, blanks."""
    entries: list[BFileEntry] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_number, f"expected two fields, got {len(parts)}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_number, f"non-integer field in {line!r}") from None
        if entries and index <= entries[-1].index:
            raise NonMonotonicIndex(
                f"line {line_number}: index {index} after {entries[-1].index}"
            )
        entries.append(BFileEntry(index, value))
    return entries


def parse_bfile(path: str) -> list[BFileEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_bfile_text(fh.read())


def verify_entries(name: str, entries: list[BFileEntry]) -> VerificationReport:
    """Compare generated terms against b-file entries.

    Numeral-form sequences compare as the decimal reading of the digit
    string, which is how the files store them.
    """
    descriptor = resolve(name)
    if not entries:
        return VerificationReport(descriptor.name, 0, 0, None)
    needed = max(e.index for e in entries) - descriptor.first_index + 1
    terms = descriptor.emit(max(needed, 0))
    matched = 0
    first_bad: Mismatch | None = None
    for entry in entries:
        offset = entry.index - descriptor.first_index
        if 0 <= offset < len(terms):
            expected = int(terms[offset])
        else:
            expected = None
        if expected == entry.value:
            matched += 1
        elif first_bad is None:
            first_bad = Mismatch(entry.index, expected, entry.value)
    return VerificationReport(descriptor.name, len(entries), matched, first_bad)


def verify_bfile(name: str, path: str) -> VerificationReport:
    return verify_entries(name, parse_bfile(path))
