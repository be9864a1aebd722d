"""Split weight-graded model of mixed Tate motives.

An object is stored as a multiplicity map ``(a, w) -> m`` standing for the
direct sum of ``m`` copies of ``Q(w)[a]`` (Tate twist ``w``, shift ``a``).
Only the associated graded of a motive is representable this way: a
non-split extension and its associated graded have the same model, so every
answer computed here is the answer for the split object.

Convention: ``Q(w)[a]`` contributes one dimension to cohomological degree
``-a`` of the weight-zero-twisted graded object.  Vanishing of Schur
functors and the K_0 class depend on ``a`` only through its parity.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .laurent import LaurentPolynomial


class GradedTateObject:
    """Finite direct sum of generators ``Q(w)[a]`` with positive multiplicities."""

    __slots__ = ("_m",)

    def __init__(self, multiplicities: Mapping[tuple[int, int], int] | None = None):
        m: dict[tuple[int, int], int] = {}
        for (a, w), k in (multiplicities or {}).items():
            k = int(k)
            if k < 0:
                raise ValueError(f"negative multiplicity {k} for Q({w})[{a}]")
            if k:
                key = (int(a), int(w))
                m[key] = m.get(key, 0) + k
        self._m = m

    @property
    def multiplicities(self) -> dict[tuple[int, int], int]:
        """Copy of the ``(degree, weight) -> multiplicity`` map."""
        return dict(self._m)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._m.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._m.get(key, 0)

    def is_zero(self) -> bool:
        return not self._m

    def __bool__(self) -> bool:
        return bool(self._m)

    @property
    def dimension(self) -> int:
        return sum(self._m.values())

    def generators(self) -> Iterator[tuple[int, int]]:
        """Each generator ``(a, w)`` repeated by its multiplicity."""
        for (a, w), k in self.items():
            for _ in range(k):
                yield (a, w)

    def __add__(self, other: "GradedTateObject") -> "GradedTateObject":
        return direct_sum(self, other)

    def __mul__(self, other: "GradedTateObject") -> "GradedTateObject":
        return tensor(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedTateObject):
            return NotImplemented
        return self._m == other._m

    def __hash__(self) -> int:
        return hash(frozenset(self._m.items()))

    def to_json(self) -> list[dict[str, int]]:
        return [{"a": a, "w": w, "mult": k} for (a, w), k in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, int]]) -> "GradedTateObject":
        out: Counter = Counter()
        for entry in data:
            out[(entry["a"], entry["w"])] += entry["mult"]
        return cls(out)

    def __str__(self) -> str:
        if not self._m:
            return "0"
        parts = []
        for (a, w), k in self.items():
            parts.append(f"{'' if k == 1 else str(k) + '*'}Q({w})[{a}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GradedTateObject({str(self)!r})"


ZERO_OBJECT = GradedTateObject()


def generator(w: int, a: int) -> GradedTateObject:
    """The object ``Q(w)[a]``."""
    return GradedTateObject({(a, w): 1})


UNIT = generator(0, 0)


def direct_sum(*objects: GradedTateObject) -> GradedTateObject:
    out: Counter = Counter()
    for x in objects:
        out.update(x.multiplicities)
    return GradedTateObject(out)


def shift(x: GradedTateObject, k: int) -> GradedTateObject:
    return GradedTateObject({(a + k, w): m for (a, w), m in x.multiplicities.items()})


def twist(x: GradedTateObject, n: int) -> GradedTateObject:
    return GradedTateObject({(a, w + n): m for (a, w), m in x.multiplicities.items()})


def tensor(x: GradedTateObject, y: GradedTateObject) -> GradedTateObject:
    out: Counter = Counter()
    for (a1, w1), m1 in x.multiplicities.items():
        for (a2, w2), m2 in y.multiplicities.items():
            out[(a1 + a2, w1 + w2)] += m1 * m2
    return GradedTateObject(out)


def scale(x: GradedTateObject, k: int) -> GradedTateObject:
    """Direct sum of ``k`` copies of ``x``."""
    return GradedTateObject({key: m * k for key, m in x.multiplicities.items()})


def weight_below(x: GradedTateObject, n: int) -> GradedTateObject:
    """Keep the generators of weight ``< n``."""
    return GradedTateObject({(a, w): m for (a, w), m in x.multiplicities.items() if w < n})


def weight_above(x: GradedTateObject, m: int) -> GradedTateObject:
    """Keep the generators of weight ``> m``."""
    return GradedTateObject({(a, w): k for (a, w), k in x.multiplicities.items() if w > m})


def gr_n(x: GradedTateObject, n: int) -> GradedTateObject:
    return weight_above(weight_below(x, n + 1), n - 1)


def weights(x: GradedTateObject) -> list[int]:
    """The finitely many weights ``n`` with ``gr_n(x) != 0``."""
    return sorted({w for (_, w) in x.multiplicities})


def gr_bar(x: GradedTateObject) -> dict[int, int]:
    """Dimensions of the cohomology of the untwisted associated graded.

    Returns ``{degree: dim}`` with ``Q(w)[a]`` counted in degree ``-a``.
    """
    dims: Counter = Counter()
    for (a, _), m in x.multiplicities.items():
        dims[-a] += m
    return dict(sorted(dims.items()))


def d_plus(x: GradedTateObject) -> int:
    return sum(m for (a, _), m in x.multiplicities.items() if a % 2 == 0)


def d_minus(x: GradedTateObject) -> int:
    return sum(m for (a, _), m in x.multiplicities.items() if a % 2)


def k0_class(x: GradedTateObject) -> LaurentPolynomial:
    """Class in ``K_0 = Z[tau, 1/tau]``: ``sum m (-1)^a tau^w``."""
    out: Counter = Counter()
    for (a, w), m in x.multiplicities.items():
        out[w] += -m if a % 2 else m
    return LaurentPolynomial(out)


def augmentation(x: LaurentPolynomial) -> int:
    """Evaluation at ``tau = 1``."""
    return x.evaluate(1)


PRESETS = ("P", "A", "Am0", "Gm")


def preset(name: str, n: int = 1) -> GradedTateObject:
    """Cell decompositions of projective space, affine space and punctured affine space.

    ``P:n`` is ``sum_i Q(i)[2i]``, ``A:n`` is the unit and ``Am0:n`` is
    ``Q(0)[0] + Q(n)[2n-1]`` (zero for ``n = 0``); ``Gm`` is ``Am0:1``.
    """
    if name == "Gm":
        name, n = "Am0", 1
    if n < 0:
        raise ValueError(f"preset {name} needs n >= 0")
    if name == "P":
        return GradedTateObject({(2 * i, i): 1 for i in range(n + 1)})
    if name == "A":
        return UNIT
    if name == "Am0":
        if n == 0:
            return GradedTateObject()  # the empty variety
        return direct_sum(UNIT, generator(n, 2 * n - 1))
    raise ValueError(f"unknown preset {name!r}; expected one of {', '.join(PRESETS)}")


# ---------------------------------------------------------------------------
# expression grammar
#   expr   := term ("+" term)*
#   term   := [nat "*"] "Q(" int ")" "[" int "]" | preset | "0"
#   preset := ("P" | "A" | "Am0") ":" nat | "Gm"
# ---------------------------------------------------------------------------

class ExpressionError(ValueError):
    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        found = repr(text[position]) if position < len(text) else "end of input"
        super().__init__(f"parse error at position {position}: expected {expected}, found {found}")


@dataclass
class _Parser:
    text: str
    pos: int = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            raise ExpressionError(self.text, self.pos, repr(s))
        self.pos += len(s)

    def integer(self, signed: bool) -> int:
        self.skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise ExpressionError(self.text, start, "an integer" if signed else "a natural number")
        return int(self.text[start:self.pos])

    def term(self) -> GradedTateObject:
        self.skip()
        if self.pos < len(self.text) and self.text[self.pos].isdigit():
            k = self.integer(signed=False)
            if not self.peek("*"):
                if k == 0:
                    return ZERO_OBJECT
                raise ExpressionError(self.text, self.pos, "'*'")
            self.expect("*")
            base = self.generator_term()
            return scale(base, k)
        for name in ("Am0", "Gm", "P", "A", "Q"):
            if self.peek(name):
                break
        else:
            raise ExpressionError(self.text, self.pos, "'Q(', 'P:', 'A:', 'Am0:' or 'Gm'")
        if name == "Q":
            return self.generator_term()
        self.pos += len(name)
        if name == "Gm":
            return preset("Gm")
        self.expect(":")
        return preset(name, self.integer(signed=False))

    def generator_term(self) -> GradedTateObject:
        self.expect("Q(")
        w = self.integer(signed=True)
        self.expect(")")
        self.expect("[")
        a = self.integer(signed=True)
        self.expect("]")
        return generator(w, a)

    def expression(self) -> GradedTateObject:
        parts = [self.term()]
        while self.peek("+"):
            self.pos += 1
            parts.append(self.term())
        self.skip()
        if self.pos != len(self.text):
            raise ExpressionError(self.text, self.pos, "'+' or end of input")
        return direct_sum(*parts)


def parse_expression(text: str) -> GradedTateObject:
    """Parse e.g. ``"Q(0)[1] + 2*Q(1)[2] + P:2"``."""
    return _Parser(text).expression()
