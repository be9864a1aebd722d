"""Integer partitions and Young diagrams.

A partition is stored as a tuple of positive parts in weakly decreasing
order, with no trailing zeros.  The empty tuple is the unique partition of 0.
"""
from __future__ import annotations

import re
from functools import lru_cache
from math import factorial
from typing import Iterable


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  Any other violation raises ``ValueError``.
    """

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def transpose(self) -> "Partition":
        return transpose(self)

    def cells(self) -> list[tuple[int, int]]:
        """Cells (row, column) of the diagram, 0-based, row-major order."""
        return [(i, j) for i, row in enumerate(self) for j in range(row)]

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


_PARTITION_RE = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse the textual form ``[3,1]`` (``[]`` is the empty partition)."""
    if not _PARTITION_RE.match(text):
        raise ValueError(f"not a partition: {text!r}")
    body = text.strip()[1:-1].strip()
    if not body:
        return Partition()
    return Partition(int(p) for p in body.split(","))


def transpose(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def diagram_contains(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    lam, mu = tuple(lam), tuple(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def rectangle(rows: int, cols: int) -> Partition:
    if rows <= 0 or cols <= 0:
        return Partition()
    return Partition((cols,) * rows)


def contains_rectangle(mu: Iterable[int], rows: int, cols: int) -> bool:
    """True iff the ``rows x cols`` rectangle fits in the diagram of ``mu``."""
    if rows <= 0 or cols <= 0:
        return True
    mu = tuple(mu)
    return len(mu) >= rows and mu[rows - 1] >= cols


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [str(p) for p in partitions_of(3)]
    ['[3]', '[2,1]', '[1,1,1]']
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions(n, n))


def partitions_up_to(n: int, include_empty: bool = False) -> list[Partition]:
    start = 0 if include_empty else 1
    return [p for k in range(start, n + 1) for p in partitions_of(k)]


def hook_lengths(lam: Iterable[int]) -> list[int]:
    lam = Partition(lam)
    lt = transpose(lam)
    return [lam[i] - j + lt[j] - i - 1 for i, j in lam.cells()]


@lru_cache(maxsize=None)
def _dim(lam: Partition) -> int:
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    return factorial(lam.size) // prod


def irreducible_dimension(lam: Iterable[int]) -> int:
    """Dimension of the irreducible symmetric-group module of shape ``lam``.

    Computed by the hook-length formula.
    """
    lam = Partition(lam)
    if not lam:
        raise ValueError("irreducible_dimension needs a partition of n >= 1")
    return _dim(lam)
