"""Integer Laurent polynomials in ``tau``, i.e. elements of ``Z[tau, 1/tau]``."""
from __future__ import annotations

import re
from typing import Iterable, Mapping


class LaurentPolynomial:
    """Finitely supported map exponent -> nonzero integer coefficient.

    Immutable; supports ``+``, ``-``, ``*`` (also by ``int``) and ``**`` with
    any integer exponent when the polynomial is a unit monomial.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        c = {}
        for e, v in (coeffs or {}).items():
            v = int(v)
            if v:
                c[int(e)] = v
        self._c = c

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def tau(cls) -> "LaurentPolynomial":
        return cls({1: 1})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def monomials(self) -> list["LaurentPolynomial"]:
        """The nonzero homogeneous pieces, by increasing exponent."""
        return [LaurentPolynomial({e: self._c[e]}) for e in sorted(self._c)]

    def homogeneous_part(self, n: int) -> "LaurentPolynomial":
        return LaurentPolynomial({n: self[n]})

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def evaluate(self, value):
        return sum(v * value ** e for e, v in self._c.items())

    def __add__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPolynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("only unit monomials have negative powers")
            (e, v), = self._c.items()
            return LaurentPolynomial({e * n: v ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def to_json(self) -> dict[str, int]:
        return {str(e): self._c[e] for e in sorted(self._c)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPolynomial":
        return cls({int(k): v for k, v in data.items()})

    def __str__(self) -> str:
        return format_terms((v, _tau_power(e)) for e, v in sorted(self._c.items()))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial(1)
TAU = LaurentPolynomial.tau()


def _coerce(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial(x)
    return NotImplemented


def _tau_power(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "tau"
    return f"tau^{e}"


def format_terms(terms: Iterable[tuple[int, str]]) -> str:
    """Join ``(coefficient, monomial-string)`` pairs as ``1 - 2*tau + tau^3``."""
    out = []
    for coef, mono in terms:
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out) if out else "0"


_TERM_RE = re.compile(r"^(\d+)?\*?(tau(?:\^(-?\d+))?)?$")


def parse_laurent(text: str) -> LaurentPolynomial:
    """Inverse of ``str``: parses ``1 - 2*tau^-1 + tau^3``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Laurent polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out: dict[int, int] = {}
    # a minus sign directly after ``^`` belongs to the exponent
    for sign, body in re.findall(r"([+-])((?:[^+-]|(?<=\^)-)+)", s):
        m = _TERM_RE.match(body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad term {body!r} in {text!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        exp = 0
        if m.group(2):
            exp = int(m.group(3)) if m.group(3) is not None else 1
        out[exp] = out.get(exp, 0) + (coef if sign == "+" else -coef)
    return LaurentPolynomial(out)
