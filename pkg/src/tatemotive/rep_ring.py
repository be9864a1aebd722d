"""The representation ring of the symmetric groups.

``R = sum_n R_n`` where ``R_n`` is free on the partitions of ``n``.  The
product is induction from ``S_p x S_q`` to ``S_{p+q}``, whose structure
constants are the Littlewood-Richardson coefficients.  Those are computed by
enumerating LR tableaux; the character formula in :func:`lr_coefficient_by_characters`
is an independent check and is never used by the production path.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import factorial
from typing import Iterable, Mapping

from .partitions import Partition, diagram_contains, parse_partition, partitions_of


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, eta: Partition) -> int:
    if lam.size != mu.size + eta.size or not diagram_contains(lam, mu):
        return 0
    if not eta:
        return 1
    # skew cells in reading order: rows top to bottom, each row right to left
    cells = [(i, j) for i in range(len(lam))
             for j in range(lam[i] - 1, (mu[i] if i < len(mu) else 0) - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * len(eta)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        total = 0
        right = filling.get((i, j + 1))
        above = filling.get((i - 1, j))
        for v in range(len(eta)):
            if counts[v] == eta[v]:
                continue
            # lattice condition on the reverse reading word
            if v and counts[v] + 1 > counts[v - 1]:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            filling[(i, j)] = v
            counts[v] += 1
            total += place(k + 1)
            counts[v] -= 1
            del filling[(i, j)]
        return total

    return place(0)


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], eta: Iterable[int]) -> int:
    """Multiplicity of ``V_lam`` in the induced product of ``V_mu`` and ``V_eta``.

    Counts semistandard fillings of the skew shape ``lam/mu`` with content
    ``eta`` whose reverse reading word is a lattice word.
    """
    return _lr(Partition(lam), Partition(mu), Partition(eta))


# ---------------------------------------------------------------------------
# Characters (oracle only)
# ---------------------------------------------------------------------------

def _beta_set(lam: Partition, length: int) -> tuple[int, ...]:
    parts = tuple(lam) + (0,) * (length - len(lam))
    return tuple(p + length - 1 - i for i, p in enumerate(parts))


def _from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return Partition(b - (n - 1 - i) for i, b in enumerate(beta))


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    k, rest = rho[0], Partition(rho[1:])
    beta = set(_beta_set(lam, len(lam)))
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in beta:
            continue
        height = sum(1 for x in beta if c < x < b)
        sign = -1 if height % 2 else 1
        total += sign * _mn(_from_beta((beta - {b}) | {c}), rest)
    return total


def mn_character(lam: Iterable[int], rho: Iterable[int]) -> int:
    """Value of the irreducible character ``chi^lam`` on cycle type ``rho``.

    Murnaghan-Nakayama rule, removing rim hooks via beta-sets.
    """
    lam, rho = Partition(lam), Partition(sorted(rho, reverse=True))
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(lam, rho)


def centralizer_order(rho: Iterable[int]) -> int:
    """``z_rho``; the class of cycle type ``rho`` has ``n!/z_rho`` elements."""
    z = 1
    for part, mult in Counter(rho).items():
        z *= part ** mult * factorial(mult)
    return z


def class_size(rho: Iterable[int]) -> int:
    rho = tuple(rho)
    return factorial(sum(rho)) // centralizer_order(rho)


def _splits(rho: Partition, p: int):
    """Ways to split the cycle multiset ``rho`` into a part of size p and the rest."""
    mults = sorted(Counter(rho).items(), reverse=True)
    for choice in iproduct(*(range(m + 1) for _, m in mults)):
        if sum(part * k for (part, _), k in zip(mults, choice)) != p:
            continue
        first, second = [], []
        for (part, m), k in zip(mults, choice):
            first += [part] * k
            second += [part] * (m - k)
        yield Partition(first), Partition(second)


def induced_character(mu: Iterable[int], eta: Iterable[int], rho: Iterable[int]) -> int:
    """Value on cycle type ``rho`` of the character induced from ``chi^mu x chi^eta``."""
    mu, eta = Partition(mu), Partition(eta)
    rho = Partition(sorted(rho, reverse=True))
    z = centralizer_order(rho)
    total = Fraction(0)
    for r1, r2 in _splits(rho, mu.size):
        total += Fraction(z, centralizer_order(r1) * centralizer_order(r2)) \
            * _mn(mu, r1) * _mn(eta, r2)
    assert total.denominator == 1
    return int(total)


def lr_coefficient_by_characters(lam: Iterable[int], mu: Iterable[int],
                                 eta: Iterable[int]) -> int:
    """Character inner product ``<chi^lam, Ind(chi^mu x chi^eta)>``."""
    lam, mu, eta = Partition(lam), Partition(mu), Partition(eta)
    n = lam.size
    if n != mu.size + eta.size:
        return 0
    total = Fraction(0)
    for rho in partitions_of(n):
        total += class_size(rho) * _mn(lam, rho) * induced_character(mu, eta, rho)
    total /= factorial(n)
    assert total.denominator == 1
    return int(total)


# ---------------------------------------------------------------------------
# Ring elements
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _basis_product(mu: Partition, eta: Partition) -> tuple[tuple[Partition, int], ...]:
    out = []
    for lam in partitions_of(mu.size + eta.size):
        c = _lr(lam, mu, eta)
        if c:
            out.append((lam, c))
    return tuple(out)


class RepRingElement:
    """Integer combination of irreducible classes ``[V_lam]``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Iterable[int], int] | None = None):
        data: dict[Partition, int] = {}
        for lam, c in (coeffs or {}).items():
            lam = parse_partition(lam) if isinstance(lam, str) else Partition(lam)
            c = data.get(lam, 0) + int(c)
            if c:
                data[lam] = c
            else:
                data.pop(lam, None)
        self._coeffs = data

    @classmethod
    def basis(cls, lam: Iterable[int]) -> "RepRingElement":
        return cls({Partition(lam): 1})

    @classmethod
    def one(cls) -> "RepRingElement":
        return cls({Partition(): 1})

    @property
    def coefficients(self) -> dict[Partition, int]:
        return dict(self._coeffs)

    def __getitem__(self, lam: Iterable[int]) -> int:
        return self._coeffs.get(Partition(lam), 0)

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree_component(self, n: int) -> "RepRingElement":
        return RepRingElement({lam: c for lam, c in self._coeffs.items() if lam.size == n})

    def dimension(self) -> int:
        """Total dimension, summing ``c * dim V_lam`` (the empty partition has dim 1)."""
        from .partitions import irreducible_dimension

        return sum(c * (irreducible_dimension(lam) if lam else 1)
                   for lam, c in self._coeffs.items())

    def __add__(self, other: "RepRingElement") -> "RepRingElement":
        out = Counter(self._coeffs)
        out.update(other._coeffs)
        return RepRingElement(out)

    def __neg__(self) -> "RepRingElement":
        return RepRingElement({lam: -c for lam, c in self._coeffs.items()})

    def __sub__(self, other: "RepRingElement") -> "RepRingElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RepRingElement({lam: c * other for lam, c in self._coeffs.items()})
        return induction_product(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepRingElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def _sorted_items(self):
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0].size, [-p for p in kv[0]]))

    def to_json(self) -> dict[str, int]:
        return {str(lam): c for lam, c in self._sorted_items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "RepRingElement":
        return cls({parse_partition(k): v for k, v in data.items()})

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for lam, c in self._sorted_items():
            terms.append(f"{'' if c == 1 else str(c) + '*'}V{lam}")
        return " + ".join(terms)


def induction_product(a: RepRingElement, b: RepRingElement) -> RepRingElement:
    """Bilinear extension of ``[V_mu][V_eta] = sum_lam [lam:mu,eta] [V_lam]``."""
    out: Counter = Counter()
    for mu, c in a.coefficients.items():
        for eta, d in b.coefficients.items():
            for lam, lr in _basis_product(mu, eta):
                out[lam] += c * d * lr
    return RepRingElement(out)
