"""Core numeral system: canonical form, carries, round trips, digit laws."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sesqui.numerals import (
    THREE_HALVES,
    BaseSpec,
    NotAnInteger,
    Numeral,
    TooShort,
    add,
    append_zero,
    decode,
    decode_integer,
    digit_count,
    encode_integer,
    normalize,
    parse_numeral,
    parse_raw_digits,
    remove_last_digit,
)

# Integers 0..14 written with digits 0,1,2 and place value (3/2)^i.
FIRST_NUMERALS = [
    "0", "1", "2", "20", "21", "22", "210", "211", "212",
    "2100", "2101", "2102", "2120", "2121", "2122",
]


def test_known_numerals():
    for n, text in enumerate(FIRST_NUMERALS):
        assert str(encode_integer(n)) == text


def test_worked_examples():
    assert str(encode_integer(11)) == "2102"
    assert str(encode_integer(32)) == "212022"
    assert decode_integer(parse_numeral("212")) == 8
    assert decode(parse_numeral("21")) == Fraction(4)


def test_decode_fractional_values():
    # 1 in the second position is worth 3/2; denominators divide powers of 2
    assert decode(parse_numeral("10")) == Fraction(3, 2)
    assert decode(parse_numeral("11")) == Fraction(5, 2)
    assert decode(parse_numeral("100")) == Fraction(9, 4)


def test_decode_integer_rejects_fractional():
    with pytest.raises(NotAnInteger):
        decode_integer(parse_numeral("11"))


def test_round_trip_small_range():
    for n in range(10_000):
        assert decode_integer(encode_integer(n)) == n


@given(st.integers(min_value=0, max_value=10**30))
def test_round_trip_large(n):
    assert decode_integer(encode_integer(n)) == n


def test_successor_coherence():
    one = encode_integer(1)
    cur = encode_integer(0)
    for n in range(2_000):
        cur = add(cur, one)
        assert cur == encode_integer(n + 1)


@given(st.integers(min_value=0, max_value=10**9), st.integers(min_value=0, max_value=10**9))
def test_add_matches_value_addition(a, b):
    assert decode_integer(add(encode_integer(a), encode_integer(b))) == a + b


def test_normalize_known_states():
    assert str(normalize([3])) == "20"
    assert str(normalize([4])) == "21"
    assert str(normalize([2, 4])) == "211"
    assert str(normalize([])) == "0"
    assert str(normalize([0, 0, 0])) == "0"


def test_normalize_idempotent_and_value_preserving():
    rng = random.Random(7)
    for _ in range(300):
        raw = [rng.randrange(0, 21) for _ in range(rng.randrange(1, 13))]
        canon = normalize(raw)
        assert decode(raw) == decode(canon)
        assert normalize(canon.digits) == canon


def _explode_randomly(raw, rng):
    """Fire explosions one box at a time in random order until stable.

    An explosion removes 3 dots from a box and adds 2 to its left
    neighbor, growing the row when the leftmost box fires.
    """
    boxes = list(raw)
    while True:
        hot = [i for i, v in enumerate(boxes) if v >= 3]
        if not hot:
            break
        i = rng.choice(hot)
        boxes[i] -= 3
        if i == 0:
            boxes.insert(0, 2)
        else:
            boxes[i - 1] += 2
    while len(boxes) > 1 and boxes[0] == 0:
        boxes.pop(0)
    return tuple(boxes) if any(boxes) else (0,)


@settings(max_examples=200)
@given(
    st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=12),
    st.integers(min_value=0, max_value=2**32),
)
def test_confluence_random_explosion_order(raw, seed):
    rng = random.Random(seed)
    assert _explode_randomly(raw, rng) == normalize(raw).digits


def test_prefix_lemma_drop_last_digit():
    # removing the last digit of n yields 2*floor(n/3)
    for n in range(3, 5_000):
        assert remove_last_digit(encode_integer(n)) == encode_integer(2 * (n // 3))


def test_proper_prefixes_are_even_integers():
    for n in range(3, 2_000):
        digits = encode_integer(n).digits
        for cut in range(1, len(digits)):
            value = decode_integer(digits[:cut])
            assert value % 2 == 0


def test_beginning_digit_properties():
    seen_211 = []
    for n in range(0, 5_000):
        text = str(encode_integer(n))
        if n >= 2:
            assert text[0] == "2"
        if n >= 6:
            assert text[:2] == "21"
        if n >= 8:
            assert text[2] in "02"
        if len(text) > 1 and len(set(text)) == 1:
            assert n == 5 and text == "22"
        if text.startswith("211"):
            seen_211.append(n)
    assert seen_211 == [7]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_ending_digits_cycle_with_period_3_to_k(k):
    period = 3**k

    def tail(n):
        digits = encode_integer(n).digits
        return ("0",) * max(0, k - len(digits)) + tuple(str(d) for d in digits[-k:])

    for n in range(period + 1):
        assert tail(n) == tail(n + period)
    if k > 1:
        shorter = 3 ** (k - 1)
        assert any(tail(n) != tail(n + shorter) for n in range(period))


def test_append_zero_multiplies_by_three_halves():
    for n in range(0, 600, 2):
        grown = append_zero(encode_integer(n))
        assert decode(grown) == Fraction(3 * n, 2)
    assert str(append_zero(encode_integer(0))) == "0"


def test_append_then_remove_is_identity_on_evens():
    for n in range(2, 600, 2):
        x = encode_integer(n)
        assert remove_last_digit(append_zero(x)) == x


def test_remove_last_digit_guards():
    with pytest.raises(TooShort):
        remove_last_digit(encode_integer(2))
    with pytest.raises(TooShort):
        remove_last_digit(encode_integer(0))


def test_digit_count_matches_length_and_is_monotone():
    prev = 0
    for n in range(4_000):
        k = digit_count(n)
        assert k == len(encode_integer(n))
        assert k >= prev
        prev = k


def test_parse_numeral_accepts_canonical_only():
    assert parse_numeral("2102").digits == (2, 1, 0, 2)
    assert parse_numeral("0").digits == (0,)
    for bad in ["", "3", "013", "21a", "01"]:
        with pytest.raises(ValueError):
            parse_numeral(bad)


def test_parse_raw_digits_allows_non_canonical():
    assert parse_raw_digits("394") == (3, 9, 4)
    with pytest.raises(ValueError):
        parse_raw_digits("1x2")
    assert str(normalize(parse_raw_digits("33"))) == "220"


def test_numeral_validation():
    with pytest.raises(ValueError):
        Numeral((0, 1))  # leading zero
    with pytest.raises(ValueError):
        Numeral((3,))  # digit out of range for p=3
    with pytest.raises(ValueError):
        Numeral(())


def test_base_spec_validation():
    with pytest.raises(ValueError):
        BaseSpec(2, 2)  # p must exceed q
    with pytest.raises(ValueError):
        BaseSpec(4, 2)  # not coprime
    with pytest.raises(ValueError):
        BaseSpec(3, 0)
    assert THREE_HALVES.ratio == Fraction(3, 2)


@pytest.mark.parametrize("p,q", [(4, 3), (5, 2), (5, 3), (7, 4)])
def test_other_bases_round_trip(p, q):
    base = BaseSpec(p, q)
    for n in range(3_000):
        x = encode_integer(n, base)
        assert all(d < p for d in x.digits)
        assert decode_integer(x, base) == n


def test_add_rejects_mixed_bases():
    with pytest.raises(ValueError):
        add(encode_integer(5), encode_integer(5, BaseSpec(5, 2)))
