"""Power series in ``t`` over ``Z[tau, 1/tau]``, truncated after ``t^order``."""
from __future__ import annotations

from typing import Iterable, Sequence

from .laurent import ONE, ZERO, LaurentPolynomial, format_terms


class TruncatedSeries:
    """Coefficients of ``t^0 .. t^order``; arithmetic is exact modulo ``t^(order+1)``."""

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients: Iterable[LaurentPolynomial | int], order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = [c if isinstance(c, LaurentPolynomial) else LaurentPolynomial(c)
                  for c in coefficients]
        coeffs = coeffs[: order + 1]
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self.coefficients: tuple[LaurentPolynomial, ...] = tuple(coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([ONE], order)

    def __getitem__(self, n: int) -> LaurentPolynomial:
        return self.coefficients[n] if 0 <= n <= self.order else ZERO

    def _check(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._check(other)
        return TruncatedSeries([self[i] + other[i] for i in range(n + 1)], n)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, LaurentPolynomial)):
            return TruncatedSeries([c * other for c in self.coefficients], self.order)
        n = self._check(other)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be 1."""
        if self[0] != ONE:
            raise ValueError("series inverse needs constant term 1")
        inv = [ONE]
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self[k]:
                    acc = acc + self[k] * inv[n - k]
            inv.append(-acc)
        return TruncatedSeries(inv, self.order)

    def at_minus_t(self) -> "TruncatedSeries":
        return TruncatedSeries([c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients)],
                               self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients, min(order, self.order))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.order, self.coefficients))

    def to_json(self) -> dict:
        return {"order": self.order, "coefficients": [c.to_json() for c in self.coefficients]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls([LaurentPolynomial.from_json(c) for c in data["coefficients"]], data["order"])

    def __str__(self) -> str:
        return format_t_polynomial(self.coefficients) + f" + O(t^{self.order + 1})"

    __repr__ = __str__


def poly_mul(a: Sequence[LaurentPolynomial], b: Sequence[LaurentPolynomial]) -> list[LaurentPolynomial]:
    """Product of two polynomials in ``t`` given as coefficient lists."""
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    while out and not out[-1]:
        out.pop()
    return out


def _t_power(k: int) -> str:
    return "" if k == 0 else ("t" if k == 1 else f"t^{k}")


def format_t_polynomial(coeffs: Sequence[LaurentPolynomial]) -> str:
    """Render ``sum c_k t^k`` as e.g. ``1 - tau*t + (1 + tau)*t^2``."""
    terms: list[tuple[int, str]] = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        tp = _t_power(k)
        items = c.coefficients
        if len(items) == 1:
            (e, v), = items.items()
            tau = "" if e == 0 else ("tau" if e == 1 else f"tau^{e}")
            mono = "*".join(s for s in (tau, tp) if s)
            terms.append((v, mono))
        else:
            group = f"({c})"
            terms.append((1, group + ("*" + tp if tp else "")))
    return format_terms(terms)
