"""The lambda-ring ``K_0 = Z[tau, 1/tau]`` of mixed Tate motives.

``lambda^i(cl X) = cl(Alt^i X)``; on a generator class ``tau^q`` this gives
``lambda_t(tau^q) = 1 + tau^q t`` and the operations extend to all of ``K_0``
multiplicatively, negatives going through series inversion.  Zeta functions
``sum cl(Sym^n X) t^n`` are inverses of ``lambda_{-t}``.
"""
from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .graded import GradedTateObject, k0_class
from .laurent import ONE, ZERO, LaurentPolynomial, format_terms
from .partitions import Partition, parse_partition, partitions_of, transpose
from .rep_ring import _basis_product
from .schur import schur_apply
from .series import TruncatedSeries, format_t_polynomial, poly_mul

DEFAULT_ORDER = int(os.environ.get("TATEMOTIVE_ORDER", "16"))


def _linear_factor(q: int, order: int) -> TruncatedSeries:
    """``1 + tau^q t``."""
    return TruncatedSeries([ONE, LaurentPolynomial.monomial(q)], order)


def _positive_lambda(counts: Mapping[int, int], order: int) -> TruncatedSeries:
    series = TruncatedSeries.one(order)
    for q in sorted(counts):
        for _ in range(counts[q]):
            series = series * _linear_factor(q, order)
    return series


def lambda_t(x: LaurentPolynomial, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``sum_i lambda^i(x) t^i`` up to ``t^order``.

    Writes ``x = P - Q`` with ``P, Q`` having non-negative coefficients and
    returns ``lambda_t(P) * lambda_t(Q)^{-1}``.
    """
    pos = {e: c for e, c in x.coefficients.items() if c > 0}
    neg = {e: -c for e, c in x.coefficients.items() if c < 0}
    result = _positive_lambda(pos, order)
    if neg:
        result = result * _positive_lambda(neg, order).inverse()
    return result


def lambda_i(x: LaurentPolynomial, i: int) -> LaurentPolynomial:
    if i < 0:
        raise ValueError("i must be non-negative")
    return lambda_t(x, i)[i]


def zeta(x: LaurentPolynomial, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``sum cl(Sym^n) t^n = (lambda_{-t}(x))^{-1}``."""
    return lambda_t(x, order).at_minus_t().inverse()


def product_formula_check(x: LaurentPolynomial, order: int = DEFAULT_ORDER) -> bool:
    """Does ``lambda_t(x)`` equal the product of ``lambda_t`` over the
    homogeneous pieces ``c_n tau^n`` of ``x``?"""
    prod = TruncatedSeries.one(order)
    for piece in x.monomials():
        prod = prod * lambda_t(piece, order)
    return prod == lambda_t(x, order)


# ---------------------------------------------------------------------------
# rational zeta functions
# ---------------------------------------------------------------------------

def _factor_poly(factors: Iterable[tuple[int, int]]) -> list[LaurentPolynomial]:
    poly = [ONE]
    for w, mult in factors:
        for _ in range(mult):
            poly = poly_mul(poly, [ONE, -LaurentPolynomial.monomial(w)])
    return poly


def _factor_str(factors: Sequence[tuple[int, int]]) -> str:
    if not factors:
        return "1"
    out = []
    for w, mult in factors:
        body = "(" + format_t_polynomial([ONE, -LaurentPolynomial.monomial(w)]) + ")"
        out.append(body if mult == 1 else f"{body}^{mult}")
    return "*".join(out)


@dataclass(frozen=True)
class RationalSeries:
    """``u / v`` with ``u, v`` products of factors ``(1 - tau^w t)^mult``.

    Factors are stored as sorted ``(w, mult)`` tuples and are not cancelled
    against each other unless :meth:`reduced` is called.
    """

    numerator_factors: tuple[tuple[int, int], ...]
    denominator_factors: tuple[tuple[int, int], ...]

    @property
    def numerator(self) -> list[LaurentPolynomial]:
        return _factor_poly(self.numerator_factors)

    @property
    def denominator(self) -> list[LaurentPolynomial]:
        return _factor_poly(self.denominator_factors)

    def reduced(self) -> "RationalSeries":
        num, den = Counter(dict(self.numerator_factors)), Counter(dict(self.denominator_factors))
        for w in set(num) & set(den):
            common = min(num[w], den[w])
            num[w] -= common
            den[w] -= common
        return RationalSeries(tuple(sorted((w, m) for w, m in num.items() if m)),
                              tuple(sorted((w, m) for w, m in den.items() if m)))

    def expand(self, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        u = TruncatedSeries(self.numerator, order)
        v = TruncatedSeries(self.denominator, order)
        return u * v.inverse()

    def numerator_str(self) -> str:
        return format_t_polynomial(self.numerator)

    def denominator_str(self) -> str:
        return format_t_polynomial(self.denominator)

    def factored_str(self) -> str:
        return f"{_factor_str(self.numerator_factors)} / {_factor_str(self.denominator_factors)}"

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        num = Counter(dict(self.numerator_factors)) + Counter(dict(other.numerator_factors))
        den = Counter(dict(self.denominator_factors)) + Counter(dict(other.denominator_factors))
        return RationalSeries(tuple(sorted(num.items())), tuple(sorted(den.items())))


def zeta_rational(x: GradedTateObject) -> RationalSeries:
    """Rational form of the zeta function: odd generators ``Q(w)[a]`` give
    numerator factors ``1 - tau^w t``, even ones denominator factors."""
    num: Counter = Counter()
    den: Counter = Counter()
    for (a, w), m in x.multiplicities.items():
        (num if a % 2 else den)[w] += m
    return RationalSeries(tuple(sorted(num.items())), tuple(sorted(den.items())))


# ---------------------------------------------------------------------------
# Schur operations (dual Jacobi-Trudi)
# ---------------------------------------------------------------------------

def _determinant(matrix: Sequence[Sequence[LaurentPolynomial]]) -> LaurentPolynomial:
    n = len(matrix)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> LaurentPolynomial:
        if row == n:
            return ONE
        total = ZERO
        sign = 1
        for c in range(n):
            if c in cols:
                continue
            entry = matrix[row][c]
            if entry:
                total = total + sign * entry * minor(row + 1, cols | {c})
            sign = -sign
        return total

    return minor(0, frozenset())


def schur_op(lam: Iterable[int], x: LaurentPolynomial) -> LaurentPolynomial:
    """``s_lam(x) = det(lambda^{lam'_i - i + j}(x))`` with ``lam'`` the transpose."""
    lam = Partition(lam)
    cols = transpose(lam)
    n = len(cols)
    if n == 0:
        return ONE
    top = cols[0] + n
    lam_series = lambda_t(x, top)

    def e(k: int) -> LaurentPolynomial:
        return lam_series[k] if 0 <= k <= top else ZERO

    matrix = [[e(cols[i] - i + j) for j in range(n)] for i in range(n)]
    return _determinant(matrix)


# ---------------------------------------------------------------------------
# universal lambda-ring polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _zero_one_count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Number of 0-1 matrices with the given row and column sums."""
    if not rows:
        return 1 if not any(cols) else 0
    first, rest = rows[0], rows[1:]
    live = [i for i, c in enumerate(cols) if c > 0]
    total = 0
    for chosen in combinations(live, first):
        new = list(cols)
        for i in chosen:
            new[i] -= 1
        total += _zero_one_count(rest, tuple(sorted(new, reverse=True)))
    return total


def _pad(p: Partition, n: int) -> tuple[int, ...]:
    return tuple(p) + (0,) * (n - len(p))


@lru_cache(maxsize=None)
def _elementary_to_monomial(n: int) -> tuple[list[Partition], list[list[int]]]:
    """``e_alpha = sum_beta M[alpha][beta] m_beta`` over partitions of ``n``."""
    parts = partitions_of(n)
    mat = [[_zero_one_count(tuple(alpha), _pad(beta, n)) for beta in parts] for alpha in parts]
    return parts, mat


def _solve_transposed(mat: list[list[int]], rhs: list[int]) -> list[int]:
    """Solve ``M^T c = rhs`` exactly."""
    n = len(mat)
    aug = [[Fraction(mat[j][i]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    out = []
    for r in range(n):
        v = aug[r][n]
        assert v.denominator == 1, "universal polynomial with non-integer coefficient"
        out.append(int(v))
    return out


def _to_elementary(n: int, monomial_coeffs: Mapping[Partition, int]) -> dict[Partition, int]:
    parts, mat = _elementary_to_monomial(n)
    c = _solve_transposed(mat, [monomial_coeffs.get(p, 0) for p in parts])
    return {alpha: v for alpha, v in zip(parts, c) if v}


@lru_cache(maxsize=None)
def product_polynomial(n: int) -> dict[tuple[Partition, Partition], int]:
    """``P_n`` with ``lambda^n(xy) = sum c * e_alpha(x) e_beta(y)``.

    Read off from the coefficient of ``t^n`` in ``prod_{i,j<=n} (1 + x_i y_j t)``:
    the coefficient of ``x^a y^b`` counts 0-1 matrices with margins ``a, b``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    parts = partitions_of(n)
    # first convert the y side to the elementary basis, one x-monomial at a time
    by_x: dict[Partition, dict[Partition, int]] = {}
    for a in parts:
        coeffs = {b: _zero_one_count(_pad(a, n), _pad(b, n)) for b in parts}
        by_x[a] = _to_elementary(n, coeffs)
    out: dict[tuple[Partition, Partition], int] = {}
    for beta in parts:
        col = {a: by_x[a].get(beta, 0) for a in parts}
        for alpha, v in _to_elementary(n, col).items():
            out[(alpha, beta)] = v
    return out


@lru_cache(maxsize=None)
def composition_polynomial(m: int, n: int) -> dict[Partition, int]:
    """``P_{m,n}`` with ``lambda^m(lambda^n(x)) = sum c * e_alpha(x)``.

    Read off from the coefficient of ``t^m`` in ``prod_{|S|=n} (1 + x_S t)``
    over ``mn`` auxiliary variables.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    size = m * n
    subsets = list(combinations(range(size), n))
    tally: Counter = Counter()
    for chosen in combinations(subsets, m):
        incidence = [0] * size
        for s in chosen:
            for i in s:
                incidence[i] += 1
        tally[tuple(incidence)] += 1
    coeffs = {p: tally.get(_pad(p, size), 0) for p in partitions_of(size)}
    return _to_elementary(size, coeffs)


def _elementary_value(alpha: Partition, ops: Sequence[LaurentPolynomial]) -> LaurentPolynomial:
    out = ONE
    for k in alpha:
        out = out * ops[k]
    return out


def verify_lambda_ring(x: LaurentPolynomial, y: LaurentPolynomial, n: int, m: int) -> bool:
    """Check ``lambda^n(xy) = P_n(...)`` and ``lambda^m(lambda^n x) = P_{m,n}(...)``."""
    if n < 1 or m < 1 or n * m > 6:
        raise ValueError("verify_lambda_ring needs n, m >= 1 and n*m <= 6")
    lx = lambda_t(x, m * n).coefficients
    ly = lambda_t(y, n).coefficients
    lhs = lambda_i(x * y, n)
    rhs = ZERO
    for (alpha, beta), c in product_polynomial(n).items():
        rhs = rhs + c * _elementary_value(alpha, lx) * _elementary_value(beta, ly)
    if lhs != rhs:
        return False
    lhs = lambda_i(lambda_i(x, n), m)
    rhs = ZERO
    for alpha, c in composition_polynomial(m, n).items():
        rhs = rhs + c * _elementary_value(alpha, lx)
    return lhs == rhs


# ---------------------------------------------------------------------------
# representation-ring valued lambda
# ---------------------------------------------------------------------------

class RepSeries:
    """Series ``sum_n c_n t^n`` with ``c_n`` a map partition-of-n -> K_0 class."""

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients: Sequence[Mapping[Partition, LaurentPolynomial]], order: int):
        coeffs: list[dict[Partition, LaurentPolynomial]] = []
        for n in range(order + 1):
            raw = coefficients[n] if n < len(coefficients) else {}
            entry = {}
            for lam, v in raw.items():
                lam = Partition(lam)
                if lam.size != n:
                    raise ValueError(f"{lam} in degree {n}")
                if v:
                    entry[lam] = v
            coeffs.append(entry)
        self.order = order
        self.coefficients = coeffs

    def __mul__(self, other: "RepSeries") -> "RepSeries":
        order = min(self.order, other.order)
        out: list[dict[Partition, LaurentPolynomial]] = [dict() for _ in range(order + 1)]
        for p in range(order + 1):
            for q in range(order + 1 - p):
                for mu, a in self.coefficients[p].items():
                    for eta, b in other.coefficients[q].items():
                        ab = a * b
                        for lam, c in _basis_product(mu, eta):
                            acc = out[p + q]
                            acc[lam] = acc.get(lam, ZERO) + c * ab
        return RepSeries(out, order)

    def degree_one_class(self) -> LaurentPolynomial:
        """Coefficient of ``t`` at ``[1]``: recovers the class of the object."""
        if self.order < 1:
            raise ValueError("need order >= 1")
        return self.coefficients[1].get(Partition((1,)), ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RepSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [
                {str(lam): c[lam].to_json() for lam in sorted(c, reverse=True)}
                for c in self.coefficients
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RepSeries":
        return cls([{parse_partition(k): LaurentPolynomial.from_json(v) for k, v in c.items()}
                    for c in data["coefficients"]], data["order"])

    def lines(self) -> list[str]:
        out = []
        for n, c in enumerate(self.coefficients):
            out.append(f"t^{n}: {_rep_coefficient_str(c)}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _rep_coefficient_str(c: Mapping[Partition, LaurentPolynomial]) -> str:
    terms = []
    for lam in sorted(c, reverse=True):
        items = c[lam].coefficients
        if len(items) == 1:
            (e, v), = items.items()
            tau = "" if e == 0 else ("tau" if e == 1 else f"tau^{e}")
            terms.append((v, "*".join(s for s in (tau, f"V{lam}") if s)))
        else:
            terms.append((1, f"({c[lam]})*V{lam}"))
    return format_terms(terms)


def lambda_sigma(x: GradedTateObject, order: int = DEFAULT_ORDER) -> RepSeries:
    """``sum_mu cl(S_mu x) [V_mu] t^|mu|`` up to ``t^order``."""
    coeffs = []
    for n in range(order + 1):
        coeffs.append({mu: k0_class(schur_apply(mu, x)) for mu in partitions_of(n)})
    return RepSeries(coeffs, order)
