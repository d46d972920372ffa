"""Smallest/largest integers per digit count and the two even digit streams."""

import itertools

import pytest

from sesqui.extremes import (
    MalformedInput,
    evenberry_digits,
    evenmelon_digits,
    extreme_table,
    iter_largest_even_values,
    iter_largest_values,
    iter_smallest_even_values,
    iter_smallest_values,
    largest_even_with_digits,
    largest_with_digits,
    melon_to_berry,
    smallest_even_with_digits,
    smallest_to_largest_numeral,
    smallest_with_digits,
)
from sesqui.numerals import add, digit_count, encode_integer, parse_numeral, remove_last_digit

SMALLEST_VALUES = [1, 3, 6, 9, 15, 24, 36, 54, 81, 123, 186, 279, 420, 630, 945]
SMALLEST_NUMERALS = ["0", "20", "210", "2100", "21010", "210110", "2101100", "21011000", "210110000"]
LARGEST_VALUES = [2, 5, 8, 14, 23, 35, 53, 80]
LARGEST_NUMERALS = ["2", "22", "212", "2122", "21222", "212212", "2122112", "21221112"]
SMALLEST_EVEN_VALUES = [2, 4, 6, 10, 16, 24, 36, 54, 82]
SMALLEST_EVEN_NUMERALS = ["2", "21", "210", "2101", "21011", "210110", "2101100", "21011000", "210110001"]
LARGEST_EVEN_VALUES = [2, 4, 8, 14, 22, 34, 52, 80]
LARGEST_EVEN_NUMERALS = ["2", "21", "212", "2122", "21221", "212211", "2122111", "21221112", "212211122"]

# digit k of each stream is the last digit of the k-digit even extreme
EVENBERRY_34 = "2101100011010011010100110100101000"


def test_smallest_value_prefix():
    assert list(itertools.islice(iter_smallest_values(), len(SMALLEST_VALUES))) == SMALLEST_VALUES


def test_largest_value_prefix():
    assert list(itertools.islice(iter_largest_values(), len(LARGEST_VALUES))) == LARGEST_VALUES


def test_even_value_prefixes():
    assert list(itertools.islice(iter_smallest_even_values(), 9)) == SMALLEST_EVEN_VALUES
    assert list(itertools.islice(iter_largest_even_values(), 8)) == LARGEST_EVEN_VALUES


def test_numeral_prefixes():
    for k, text in enumerate(SMALLEST_NUMERALS, start=1):
        assert str(smallest_with_digits(k)[1]) == text
    for k, text in enumerate(LARGEST_NUMERALS, start=1):
        assert str(largest_with_digits(k)[1]) == text
    for k, text in enumerate(SMALLEST_EVEN_NUMERALS, start=1):
        assert str(smallest_even_with_digits(k)[1]) == text
    for k, text in enumerate(LARGEST_EVEN_NUMERALS, start=1):
        assert str(largest_even_with_digits(k)[1]) == text


def test_consecutive_digit_counts_abut():
    # the largest k-digit integer is one below the smallest (k+1)-digit one
    smallest = list(itertools.islice(iter_smallest_values(), 41))
    largest = list(itertools.islice(iter_largest_values(), 40))
    for k in range(40):
        assert smallest[k + 1] == largest[k] + 1


def test_even_extremes_straddle_the_boundary():
    smallest = list(itertools.islice(iter_smallest_values(), 41))
    largest = list(itertools.islice(iter_largest_values(), 40))
    even_smallest = list(itertools.islice(iter_smallest_even_values(), 40))
    even_largest = list(itertools.islice(iter_largest_even_values(), 40))
    for k in range(40):
        assert even_smallest[k] in (smallest[k], smallest[k] + 1)
        assert even_largest[k] in (largest[k], largest[k] - 1)


def test_even_add_two_crosses_digit_boundary():
    even_largest = list(itertools.islice(iter_largest_even_values(), 30))
    even_smallest = list(itertools.islice(iter_smallest_even_values(), 31))
    for k in range(29):
        assert even_largest[k] + 2 == even_smallest[k + 1]


def test_digit_counts_are_correct():
    for k in range(2, 41):
        s, sn = smallest_with_digits(k)
        l, ln = largest_with_digits(k)
        assert digit_count(s) == k == len(sn)
        assert digit_count(l) == k == len(ln)
        assert digit_count(s - 1) == k - 1
        assert digit_count(l + 1) == k + 1
    for k in range(1, 41):
        se, _ = smallest_even_with_digits(k)
        le, _ = largest_even_with_digits(k)
        assert se % 2 == 0 and le % 2 == 0
        assert digit_count(se) == k == digit_count(le)


def test_boundary_characterization_exhaustive():
    """Scan every k-digit integer: extreme numerals are the unique ones
    with the claimed digit shapes."""
    for k in range(1, 11):
        s, _ = smallest_with_digits(k)
        l, _ = largest_with_digits(k)
        no_zero_end_two = []
        ends_zero_no_late_two = []
        for n in range(s, l + 1):
            text = str(encode_integer(n))
            assert len(text) == k
            if "0" not in text and text.endswith("2"):
                no_zero_end_two.append(n)
            if text.endswith("0") and "2" not in text[1:]:
                ends_zero_no_late_two.append(n)
        assert no_zero_end_two == [l]
        assert ends_zero_no_late_two == [s]


def test_extreme_numeral_shapes():
    for k in range(2, 41):
        sn = str(smallest_with_digits(k)[1])
        ln = str(largest_with_digits(k)[1])
        assert "0" not in ln
        assert "2" not in sn[1:]
        assert sn.endswith("0") and ln.endswith("2")


def test_truncation_moves_down_one_digit():
    for k in range(2, 41):
        assert remove_last_digit(smallest_even_with_digits(k)[1]) == smallest_even_with_digits(k - 1)[1]
        assert remove_last_digit(largest_even_with_digits(k)[1]) == largest_even_with_digits(k - 1)[1]


def test_smallest_to_largest_transform():
    smallest = [smallest_with_digits(k)[1] for k in range(1, 42)]
    largest = [largest_with_digits(k)[1] for k in range(1, 41)]
    for k in range(1, 41):
        assert smallest_to_largest_numeral(smallest[k]) == largest[k - 1]
    assert str(smallest_to_largest_numeral("20")) == "2"
    assert str(smallest_to_largest_numeral("210110000")) == "21221112"


def test_smallest_to_largest_rejects_other_shapes():
    for bad in ["2", "21", "0", "2120", "2121", "220", "2122"]:
        with pytest.raises(MalformedInput):
            smallest_to_largest_numeral(bad)
    # unparsable text fails at the parsing layer, not the shape check
    with pytest.raises(ValueError):
        smallest_to_largest_numeral("abc")


def test_extreme_table_is_coherent():
    t = extreme_table(6)
    assert t.k == 6
    assert (t.smallest, t.largest) == (24, 35)
    assert (t.smallest_even, t.largest_even) == (24, 34)
    assert t.largest_even_numeral == "212211"
    assert str(parse_numeral(t.smallest_numeral)) == t.smallest_numeral


def test_evenberry_prefix():
    assert evenberry_digits(34) == EVENBERRY_34


def test_evenmelon_against_recomputed_tail():
    # last digits of the k-digit largest evens, recomputed independently
    stream = evenmelon_digits(33)
    expected = "".join(str(encode_integer(v).digits[-1]) for v in itertools.islice(iter_largest_even_values(), 33))
    assert stream == expected
    assert len(stream) == 33
    assert stream.startswith("21221112")


def test_streams_extend_the_even_numerals():
    berry = evenberry_digits(60)
    melon = evenmelon_digits(60)
    for k in range(1, 61):
        assert berry[:k] == str(smallest_even_with_digits(k)[1])
        assert melon[:k] == str(largest_even_with_digits(k)[1])


def test_stream_digit_k_is_value_mod_3():
    smalls = list(itertools.islice(iter_smallest_even_values(), 50))
    bigs = list(itertools.islice(iter_largest_even_values(), 50))
    assert evenberry_digits(50) == "".join(str(v % 3) for v in smalls)
    assert evenmelon_digits(50) == "".join(str(v % 3) for v in bigs)


def test_add_two_links_the_streams():
    berry = evenberry_digits(61)
    melon = evenmelon_digits(60)
    two = encode_integer(2)
    for k in range(1, 61):
        assert add(parse_numeral(melon[:k]), two) == parse_numeral(berry[: k + 1])


def test_melon_to_berry_transform():
    for k in range(1, 60):
        assert melon_to_berry(evenmelon_digits(k)) == evenberry_digits(k + 1)
    with pytest.raises(MalformedInput):
        melon_to_berry("12")
    with pytest.raises(MalformedInput):
        melon_to_berry("")


def test_stream_guards():
    assert evenberry_digits(0) == ""
    with pytest.raises(ValueError):
        evenberry_digits(-1)
    with pytest.raises(ValueError):
        smallest_with_digits(0)
