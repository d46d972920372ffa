"""Request and response schemas for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class EncodeResponse(BaseModel):
    n: int
    numeral: str
    digit_count: int


class DecodeResponse(BaseModel):
    digits: str
    numerator: int
    denominator: int
    is_integer: bool
    canonical: str


class SequenceInfo(BaseModel):
    name: str
    description: str
    first_index: int
    forms: list[str]


class SequenceResponse(BaseModel):
    name: str
    form: str
    first_index: int
    terms: list[str]


class TreeNode(BaseModel):
    depth: int
    digit: int
    value: int


class TreeResponse(BaseModel):
    depth: int
    nodes: list[TreeNode]
    rendered: str


class DivisibilityResponse(BaseModel):
    n: int
    numeral: str
    trailing_zeros: int
    three_adic_valuation: int
    alt_digit_sum_mod5: int


class ClassifyRequest(BaseModel):
    mode: Literal["sorted", "reverse"]
    start: tuple[str, str]
    cap: Optional[int] = Field(default=None, ge=1)


class BehaviorResponse(BaseModel):
    kind: str
    entry_index: int
    witness: list[str]
    twos: Optional[int] = None


class SweepRequest(BaseModel):
    mode: Literal["sorted", "reverse"]
    max_digits: int = Field(ge=0, le=16)
    cap: Optional[int] = Field(default=None, ge=1)


class SweepRow(BaseModel):
    kind: str
    twos: Optional[int] = None
    count: int


class SweepResponse(BaseModel):
    mode: str
    max_digits: int
    total_pairs: int
    cap_exceeded: int
    rows: list[SweepRow]


class VerifyRequest(BaseModel):
    name: str
    content: str = Field(description="b-file text, one 'index value' per line")


class MismatchModel(BaseModel):
    index: int
    expected: Optional[int]
    found: int


class VerifyResponse(BaseModel):
    name: str
    compared: int
    matched: int
    ok: bool
    mismatch: Optional[MismatchModel] = None
