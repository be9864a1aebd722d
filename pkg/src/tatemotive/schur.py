"""Schur functors on split graded Tate objects.

``S_lam(X)`` is evaluated over the generator alphabet of ``X``: each
generator ``Q(w)[a]`` is a letter, even when ``a`` is even and odd otherwise.
The result has one summand ``Q(sum w)[sum a]`` for every super semistandard
tableau of shape ``lam``: entries weakly increase along rows and down
columns, an even letter never repeats in a column, an odd letter never
repeats in a row.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .graded import GradedTateObject, d_minus, d_plus
from .partitions import Partition, contains_rectangle, rectangle

Letter = tuple[int, int]  # (degree a, weight w)


def alphabet(x: GradedTateObject) -> list[Letter]:
    """Even generators first, then odd ones; each block sorted by (w, a)."""
    gens = list(x.generators())
    even = sorted((g for g in gens if g[0] % 2 == 0), key=lambda g: (g[1], g[0]))
    odd = sorted((g for g in gens if g[0] % 2), key=lambda g: (g[1], g[0]))
    return even + odd


@lru_cache(maxsize=None)
def _row_fillings(length: int, above: tuple[int, ...] | None,
                  parities: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    k = len(parities)
    out: list[tuple[int, ...]] = []
    row: list[int] = []

    def extend(j: int) -> None:
        if j == length:
            out.append(tuple(row))
            return
        lo = row[-1] if row else 0
        if above is not None:
            lo = max(lo, above[j])
        for v in range(lo, k):
            odd = parities[v]
            if row and v == row[-1] and odd:
                continue
            if above is not None and v == above[j] and not odd:
                continue
            row.append(v)
            extend(j + 1)
            row.pop()

    extend(0)
    return tuple(out)


def _by_tableaux(lam: Partition, letters: Sequence[Letter]) -> Counter:
    parities = tuple(a % 2 for a, _ in letters)
    states: dict[tuple[int, ...] | None, Counter] = {None: Counter({(0, 0): 1})}
    for length in lam:
        nxt: dict[tuple[int, ...], Counter] = {}
        for above, weights in states.items():
            for row in _row_fillings(length, above, parities):
                da = sum(letters[v][0] for v in row)
                dw = sum(letters[v][1] for v in row)
                acc = nxt.setdefault(row, Counter())
                for (a, w), c in weights.items():
                    acc[(a + da, w + dw)] += c
        states = nxt
        if not states:
            return Counter()
    total: Counter = Counter()
    for weights in states.values():
        total.update(weights)
    return total


def _horizontal_strips(shape: Partition):
    """All ``nu`` with ``shape/nu`` a horizontal strip."""
    n = len(shape)
    bounds = [(shape[i + 1] if i + 1 < n else 0, shape[i]) for i in range(n)]

    def rec(i: int, acc: list[int]):
        if i == n:
            yield Partition(acc)
            return
        lo, hi = bounds[i]
        for v in range(lo, hi + 1):
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    yield from rec(0, [])


def _vertical_strips(shape: Partition):
    for nu in _horizontal_strips(shape.transpose()):
        yield nu.transpose()


def _by_pieri(lam: Partition, letters: Sequence[Letter]) -> Counter:
    letters = tuple(letters)

    @lru_cache(maxsize=None)
    def fill(k: int, shape: Partition) -> tuple:
        if not shape:
            return (((0, 0), 1),)
        if k == 0:
            return ()
        a, w = letters[k - 1]
        strips = _vertical_strips(shape) if a % 2 else _horizontal_strips(shape)
        acc: Counter = Counter()
        for nu in strips:
            s = shape.size - nu.size
            for (b, v), c in fill(k - 1, nu):
                acc[(b + s * a, v + s * w)] += c
        return tuple(acc.items())

    return Counter(dict(fill(len(letters), lam)))


def schur_apply(lam: Iterable[int], x: GradedTateObject, *, method: str = "tableaux",
                letters: Sequence[Letter] | None = None) -> GradedTateObject:
    """Evaluate the Schur functor ``S_lam`` on ``x``.

    ``method`` is ``"tableaux"`` (default) or ``"pieri"``, which adds one
    generator at a time as a horizontal (even) or vertical (odd) strip.
    ``letters`` overrides the alphabet order; it must list the generators of
    ``x`` with multiplicity.
    """
    lam = Partition(lam)
    if letters is None:
        letters = alphabet(x)
    elif sorted(letters) != sorted(x.generators()):
        raise ValueError("letters must enumerate the generators of x")
    if method == "tableaux":
        counts = _by_tableaux(lam, letters)
    elif method == "pieri":
        counts = _by_pieri(lam, letters)
    else:
        raise ValueError(f"unknown method {method!r}")
    return GradedTateObject(counts)


def schur_vanishes(lam: Iterable[int], x: GradedTateObject) -> bool:
    """Vanishing criterion: ``S_lam(x) = 0`` iff ``lam`` contains the
    ``(d+ + 1) x (d- + 1)`` rectangle."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("the Schur functor of the empty partition is the unit, never zero")
    return contains_rectangle(lam, d_plus(x) + 1, d_minus(x) + 1)


def alt_power(x: GradedTateObject, n: int) -> GradedTateObject:
    if n < 0:
        raise ValueError("n must be non-negative")
    return schur_apply((1,) * n, x)


def sym_power(x: GradedTateObject, n: int) -> GradedTateObject:
    if n < 0:
        raise ValueError("n must be non-negative")
    return schur_apply((n,) if n else (), x)


@dataclass(frozen=True)
class Classification:
    d_plus: int
    d_minus: int
    evenly_finite: bool
    oddly_finite: bool
    alt_vanishing_index: int | None
    sym_vanishing_index: int | None
    kimura_dimension: int
    square_vanishing_index: int

    def to_dict(self) -> dict:
        return asdict(self)


def classify(x: GradedTateObject) -> Classification:
    """Finite-dimensionality data of (the split object) ``x``.

    The vanishing indices are the least ``n >= 1`` with ``Alt^n``,
    ``Sym^n`` or ``S_{n x n}`` zero on ``x``.
    """
    dp, dm = d_plus(x), d_minus(x)
    return Classification(
        d_plus=dp,
        d_minus=dm,
        evenly_finite=dm == 0,
        oddly_finite=dp == 0,
        alt_vanishing_index=dp + 1 if dm == 0 else None,
        sym_vanishing_index=dm + 1 if dp == 0 else None,
        kimura_dimension=dp + dm,
        square_vanishing_index=max(dp, dm) + 1,
    )


def square(n: int) -> Partition:
    return rectangle(n, n)
