"""The infinite tree of positive even integers.

Each even node x has one or two even children chosen so that the edge
digits along the root path spell the node's base-3/2 numeral: when x/2
is odd the only child is 3x/2 + 1 (edge digit 1), otherwise the
children are 3x/2 (digit 0) and 3x/2 + 2 (digit 2).  Reading the tree
level by level, left to right, enumerates 2, 4, 6, 8, ... without gaps,
and level sizes follow the Josephus-like rule a(n) = ceil((1 + sum of
earlier sizes) / 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .numerals import Numeral, encode_integer


class InvalidNode(ValueError):
    """Raised for values that are not positive even integers."""


ROOT_VALUE = 2


@dataclass(frozen=True, slots=True)
class EvenTreeNode:
    value: int
    edge_digit: int
    children: tuple["EvenTreeNode", ...]


def children_of(value: int) -> list[tuple[int, int]]:
    """(edge digit, child value) pairs of an even node, left to right."""
    if value < 2 or value % 2:
        raise InvalidNode(f"{value} is not a positive even integer")
    half = value // 2
    if half % 2:
        return [(1, 3 * half + 1)]
    return [(0, 3 * half), (2, 3 * half + 2)]


def build_tree(depth: int) -> EvenTreeNode:
    """Tree rooted at 2 (root edge digit 2) expanded to exactly `depth` levels."""
    if depth < 1:
        raise ValueError("depth must be at least 1")

    def grow(value: int, digit: int, levels: int) -> EvenTreeNode:
        if levels == 1:
            return EvenTreeNode(value, digit, ())
        kids = tuple(grow(v, d, levels - 1) for d, v in children_of(value))
        return EvenTreeNode(value, digit, kids)

    return grow(ROOT_VALUE, 2, depth)


def levels(root: EvenTreeNode) -> list[list[EvenTreeNode]]:
    """Nodes grouped by level, each level left to right."""
    out: list[list[EvenTreeNode]] = []
    current = [root]
    while current:
        out.append(current)
        current = [child for node in current for child in node.children]
    return out


def iter_preorder(root: EvenTreeNode, depth: int = 1) -> Iterator[tuple[int, EvenTreeNode]]:
    yield depth, root
    for child in root.children:
        yield from iter_preorder(child, depth + 1)


def path_representation(value: int) -> Numeral:
    """Numeral spelled by the root path, computed by walking parents.

    The parent of an even node x > 2 is 2 * (x // 3) and the edge into x
    carries digit x mod 3.  This is independent of encode_integer and is
    the cross-check for the tree's defining property.
    """
    if value < 2 or value % 2:
        raise InvalidNode(f"{value} is not a positive even integer")
    rev: list[int] = []
    v = value
    while v != ROOT_VALUE:
        rev.append(v % 3)
        v = 2 * (v // 3)
    rev.append(2)
    return Numeral(tuple(reversed(rev)))


def level_count(k: int) -> int:
    """Number of nodes on level k (1-based); the sizes run 1,1,2,3,4,6,9,...

    Satisfies a(k) = ceil((1 + sum of previous counts) / 2).
    """
    if k < 1:
        raise ValueError("levels are numbered from 1")
    return level_counts(k)[-1]


def level_counts(count: int) -> list[int]:
    """First `count` level sizes."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out: list[int] = []
    total = 0
    for _ in range(count):
        nxt = total // 2 + 1
        out.append(nxt)
        total += nxt
    return out


def integers_with_k_digits(count: int) -> list[int]:
    """How many nonnegative integers have exactly k digits, k = 1..count.

    Starts 3, 3, 3, 6, 9, 12, 18, ... and each term is three times the
    tree's level size one step earlier.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    out: list[int] = []
    total = 0
    for k in range(1, count + 1):
        if k == 1:
            nxt = 3
        else:
            nxt = 3 * ((total + 1) // 2) - total
        out.append(nxt)
        total += nxt
    return out


def render_tree(root: EvenTreeNode) -> str:
    """Indented preorder rendering, one `<depth> <digit>_<value>` per line."""
    lines = [
        "  " * (depth - 1) + f"{depth} {node.edge_digit}_{node.value}"
        for depth, node in iter_preorder(root)
    ]
    return "\n".join(lines)


def _check_encode_agreement(value: int) -> bool:
    return path_representation(value) == encode_integer(value)
