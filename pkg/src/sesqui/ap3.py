"""Greedy partition of the nonnegative integers into AP3-free classes.

Each n joins the first class it does not complete a three-term
arithmetic progression in.  Class 0 is the Stanley sequence of numbers
with no digit 2 in ternary; the class index of n satisfies
a(3n + j) = floor((3 a(n) + j) / 2), which ties the partition to the
largest-even extremes through l_n = 2 * A006999(n).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class GreedyPartition:
    """Greedy class assignment for 0..limit-1.

    assignment[n] is the class index of n; classes[k] lists the members
    of class k in order.
    """

    limit: int
    assignment: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]


def _completes_progression(members: set[int], n: int) -> bool:
    # n > every member, so x < y < n with y - x = n - y means x = 2y - n
    return any(2 * y - n in members for y in members if 2 * y >= n)


def greedy_partition(limit: int) -> GreedyPartition:
    """Assign each n < limit to the first class where it starts no AP3."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    classes: list[list[int]] = []
    sets: list[set[int]] = []
    assignment: list[int] = []
    for n in range(limit):
        k = 0
        while k < len(sets) and _completes_progression(sets[k], n):
            k += 1
        if k == len(sets):
            classes.append([])
            sets.append(set())
        classes[k].append(n)
        sets[k].add(n)
        assignment.append(k)
    return GreedyPartition(limit, tuple(assignment), tuple(tuple(c) for c in classes))


def class_index(n: int) -> int:
    """Greedy class of n via the ternary digit recurrence, no sets needed."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    digits = _ternary(n)
    a = 0
    for d in digits:
        a = (3 * a + d) // 2
    return a


def _ternary(n: int) -> list[int]:
    if n == 0:
        return [0]
    rev = []
    while n:
        n, d = divmod(n, 3)
        rev.append(d)
    return rev[::-1]


def all_twos_class(n: int) -> int:
    """Greedy class of 3^n - 1 (ternary all twos), the largest class
    index any integer below 3^n receives.

    Folding the digit recurrence over n twos gives
    a(n) = floor((3 a(n-1) + 2) / 2) from a(0) = 0, and twice this value
    is the largest even integer with n digits in base 3/2, which bridges
    the partition to the extremes recurrences.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = 0
    for _ in range(n):
        a = (3 * a + 2) // 2
    return a


def no_two_in_ternary(count: int) -> list[int]:
    """First `count` members of class 0: integers with no ternary digit 2."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    out: list[int] = []
    n = 0
    while len(out) < count:
        if all(d != 2 for d in _ternary(n)):
            out.append(n)
        n += 1
    return out
