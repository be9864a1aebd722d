"""Brute-force Schur functor dimensions from Young symmetrizers.

The symmetric group acts on ``V^{(x)n}`` of a super vector space by permuting
tensor factors, with a sign ``-1`` for every crossing of two odd vectors
(Koszul rule).  The rank of the Young symmetrizer of shape ``lam`` on this
representation is ``dim S_lam(V)``.  Ranks are exact integer ranks.

This module shares no code with :mod:`tatemotive.schur`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import gcd
from typing import Iterable, Sequence

from .graded import GradedTateObject
from .partitions import Partition, transpose


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Budget:
    max_dim: int = 4
    max_n: int = 5

    def check(self, dim: int, n: int) -> None:
        if dim > self.max_dim or n > self.max_n:
            raise BudgetExceeded(
                f"oracle budget exceeded: dim={dim} (max {self.max_dim}), n={n} (max {self.max_n})")


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class SuperWeightedSpace:
    """Ordered basis; vector ``i`` has degree ``degrees[i]`` and weight ``weights[i]``."""

    degrees: tuple[int, ...]
    weights: tuple[int, ...]

    @classmethod
    def from_object(cls, x: GradedTateObject) -> "SuperWeightedSpace":
        gens = list(x.generators())
        return cls(tuple(a for a, _ in gens), tuple(w for _, w in gens))

    @classmethod
    def from_counts(cls, even: int, odd: int) -> "SuperWeightedSpace":
        return cls((0,) * even + (1,) * odd, (0,) * (even + odd))

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def parities(self) -> tuple[int, ...]:
        return tuple(a % 2 for a in self.degrees)


# ---------------------------------------------------------------------------
# signed action
# ---------------------------------------------------------------------------

def reduced_decomposition(sigma: Sequence[int]) -> list[int]:
    """Adjacent transpositions ``s_i`` (swap positions i, i+1), applied left to
    right to a word, that realize the action of ``sigma``; bubble sort."""
    target = list(sigma)
    n = len(target)
    # word position p must end at sigma[p]; sort the destination labels
    current = list(target)
    steps = []
    for end in range(n - 1, 0, -1):
        for i in range(end):
            if current[i] > current[i + 1]:
                current[i], current[i + 1] = current[i + 1], current[i]
                steps.append(i)
    return steps


def apply_transpositions(word: Sequence[int], parities: Sequence[int],
                         steps: Iterable[int]) -> tuple[tuple[int, ...], int]:
    """Apply adjacent swaps to ``word``; each swap of two odd letters costs ``-1``."""
    w = list(word)
    sign = 1
    for i in steps:
        if parities[w[i]] and parities[w[i + 1]]:
            sign = -sign
        w[i], w[i + 1] = w[i + 1], w[i]
    return tuple(w), sign


def signed_permutation_action(sigma: Sequence[int], word: Sequence[int],
                              parities: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Move the tensor factor at position ``p`` to position ``sigma[p]``.

    Returns the new basis word and its Koszul sign, accumulated over the
    bubble-sort decomposition of ``sigma``.
    """
    if len(sigma) != len(word):
        raise ValueError("permutation and word lengths differ")
    return apply_transpositions(word, parities, reduced_decomposition(sigma))


def _permute(sigma: Sequence[int], word: Sequence[int],
             parities: Sequence[int]) -> tuple[tuple[int, ...], int]:
    # direct inversion count among odd factors; same result as the decomposition
    n = len(word)
    out = [0] * n
    for p, q in enumerate(sigma):
        out[q] = word[p]
    inv = 0
    for i in range(n):
        if parities[word[i]]:
            for j in range(i + 1, n):
                if parities[word[j]] and sigma[i] > sigma[j]:
                    inv += 1
    return tuple(out), -1 if inv % 2 else 1


def _compose(s: Sequence[int], t: Sequence[int]) -> tuple[int, ...]:
    """Position map of 'first t, then s'."""
    return tuple(s[t[p]] for p in range(len(t)))


def _parity_of(perm: Sequence[int]) -> int:
    seen, sign = set(), 1
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _stabilizer(blocks: list[list[int]], n: int) -> list[tuple[int, ...]]:
    perms = [tuple(range(n))]
    for block in blocks:
        if len(block) < 2:
            continue
        new = []
        for img in permutations(block):
            step = list(range(n))
            for src, dst in zip(block, img):
                step[src] = dst
            for base in perms:
                new.append(_compose(step, base))
        perms = new
    return perms


def young_symmetrizer(lam: Iterable[int]) -> list[tuple[tuple[int, ...], int]]:
    """``c_lam = (sum_col sgn(q) q)(sum_row p)`` for the row-reading tableau,
    as a list of ``(permutation, coefficient)`` with the row part applied first."""
    lam = Partition(lam)
    n = lam.size
    rows, start = [], 0
    for r in lam:
        rows.append(list(range(start, start + r)))
        start += r
    cols = [[rows[i][j] for i in range(len(lam)) if lam[i] > j] for j in range(len(transpose(lam)))]
    row_group = _stabilizer(rows, n)
    col_group = _stabilizer(cols, n)
    terms: Counter = Counter()
    for q in col_group:
        sq = _parity_of(q)
        for p in row_group:
            terms[_compose(q, p)] += sq
    return [(perm, c) for perm, c in terms.items() if c]


# ---------------------------------------------------------------------------
# exact rank
# ---------------------------------------------------------------------------

def integer_rank(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q of sparse integer rows, by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                pivots[col] = {k: v // g for k, v in row.items()}
                rank += 1
                break
            a, b = piv[col], row[col]
            new: dict[int, int] = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {k: v // g for k, v in new.items()} if g > 1 else new
    return rank


def _multiset_words(content: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(set(permutations(content)))


def _block_rank(lam: Partition, content: tuple[int, ...], parities: Sequence[int],
                sym: list[tuple[tuple[int, ...], int]]) -> int:
    words = _multiset_words(content)
    index = {w: i for i, w in enumerate(words)}
    images = []
    seen = set()
    for word in words:
        vec: Counter = Counter()
        for perm, c in sym:
            out, s = _permute(perm, word, parities)
            vec[index[out]] += c * s
        key = frozenset((k, v) for k, v in vec.items() if v)
        if key and key not in seen:
            seen.add(key)
            images.append(dict(key))
    return integer_rank(images)


def _contents(dim: int, n: int):
    def rec(start: int, left: int, acc: list[int]):
        if left == 0:
            yield tuple(acc)
            return
        for i in range(start, dim):
            acc.append(i)
            yield from rec(i, left - 1, acc)
            acc.pop()

    yield from rec(0, n, [])


def _ranks_by_content(lam: Partition, space: SuperWeightedSpace, budget: Budget):
    n = lam.size
    if n < 1:
        raise ValueError("the oracle needs |lam| >= 1")
    budget.check(space.dim, n)
    sym = young_symmetrizer(lam)
    parities = space.parities
    for content in _contents(space.dim, n):
        r = _block_rank(lam, content, parities, sym)
        if r:
            yield content, r


def young_symmetrizer_rank(lam: Iterable[int], space: SuperWeightedSpace,
                           budget: Budget = DEFAULT_BUDGET) -> int:
    """Rank of the Young symmetrizer of ``lam`` on the ``|lam|``-th tensor power."""
    lam = Partition(lam)
    return sum(r for _, r in _ranks_by_content(lam, space, budget))


def graded_schur_oracle(lam: Iterable[int], x: GradedTateObject,
                        budget: Budget = DEFAULT_BUDGET) -> GradedTateObject:
    """``S_lam(x)`` with multiplicities read off as block ranks.

    The symmetrizer preserves the multiset of basis vectors in a word, so the
    rank is computed per multiset and accumulated under ``(sum a, sum w)``.
    """
    lam = Partition(lam)
    space = SuperWeightedSpace.from_object(x)
    if not lam:
        return GradedTateObject({(0, 0): 1})
    out: Counter = Counter()
    for content, r in _ranks_by_content(lam, space, budget):
        a = sum(space.degrees[i] for i in content)
        w = sum(space.weights[i] for i in content)
        out[(a, w)] += r
    return GradedTateObject(out)
