"""Exact base 3/2 arithmetic, its integer sequences, and digit dynamics."""

from .numerals import (
    BaseSpec,
    Numeral,
    THREE_HALVES,
    add,
    append_zero,
    decode,
    decode_integer,
    digit_count,
    encode_integer,
    normalize,
    parse_numeral,
    remove_last_digit,
)

__version__ = "0.1.0"

__all__ = [
    "BaseSpec",
    "Numeral",
    "THREE_HALVES",
    "add",
    "append_zero",
    "decode",
    "decode_integer",
    "digit_count",
    "encode_integer",
    "normalize",
    "parse_numeral",
    "remove_last_digit",
    "__version__",
]
