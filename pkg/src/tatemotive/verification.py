"""Cross-checking suites run by ``tatemotive verify`` and the acceptance tests."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from .graded import GradedTateObject, direct_sum, k0_class, shift, tensor
from .k0_lambda import (
    lambda_sigma,
    lambda_t,
    product_formula_check,
    schur_op,
    verify_lambda_ring,
    zeta,
    zeta_rational,
)
from .laurent import ONE, LaurentPolynomial
from .oracle import DEFAULT_BUDGET, Budget, graded_schur_oracle
from .partitions import Partition, partitions_of, partitions_up_to, transpose
from .rep_ring import lr_coefficient, lr_coefficient_by_characters
from .schur import schur_apply, schur_vanishes
from .series import TruncatedSeries


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, label: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(label())

    def to_json(self) -> dict:
        return {"name": self.name, "cases": self.cases, "failures": list(self.failures)}

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.cases} cases, {len(self.failures)} failures"


# ---------------------------------------------------------------------------
# generators of test data
# ---------------------------------------------------------------------------

def grid_objects(max_dim: int, degrees=range(4), weights=range(3)) -> Iterator[GradedTateObject]:
    """Every object with at most ``max_dim`` generators from the given grid."""
    gens = [(a, w) for a in degrees for w in weights]
    for k in range(max_dim + 1):
        for combo in combinations_with_replacement(gens, k):
            m: dict = {}
            for g in combo:
                m[g] = m.get(g, 0) + 1
            yield GradedTateObject(m)


def random_object(rng: random.Random, max_gens: int = 3, degrees=(-1, 3),
                  weights=(-2, 2)) -> GradedTateObject:
    m: dict = {}
    for _ in range(rng.randint(0, max_gens)):
        g = (rng.randint(*degrees), rng.randint(*weights))
        m[g] = m.get(g, 0) + 1
    return GradedTateObject(m)


def random_partition(rng: random.Random, max_size: int, min_size: int = 1) -> Partition:
    n = rng.randint(min_size, max_size)
    return rng.choice(partitions_of(n))


def random_laurent(rng: random.Random, exponents=(-3, 3), coefficients=(-3, 3),
                   max_terms: int = 3) -> LaurentPolynomial:
    out: dict = {}
    for _ in range(rng.randint(0, max_terms)):
        e = rng.randint(*exponents)
        out[e] = out.get(e, 0) + rng.randint(*coefficients)
    return LaurentPolynomial(out)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def triple_agreement(max_dim: int = 3, max_size: int = 4,
                     budget: Budget = DEFAULT_BUDGET) -> SuiteReport:
    """Criterion, tableau evaluation and symmetrizer ranks agree on the grid."""
    budget.check(max_dim, max_size)
    report = SuiteReport("triple agreement")
    lams = partitions_up_to(max_size)
    for x in grid_objects(max_dim):
        for lam in lams:
            criterion = schur_vanishes(lam, x)
            value = schur_apply(lam, x)
            oracle = graded_schur_oracle(lam, x, budget)
            ok = value == oracle and criterion == value.is_zero()
            report.check(ok, lambda: f"S{lam}({x}): criterion={criterion} "
                                     f"tableaux={value} oracle={oracle}")
    return report


def shift_duality(rng: random.Random, cases: int = 200, max_size: int = 5) -> SuiteReport:
    report = SuiteReport("shift duality")
    for _ in range(cases):
        x, lam = random_object(rng), random_partition(rng, max_size)
        lhs = schur_apply(lam, shift(x, 1))
        rhs = shift(schur_apply(transpose(lam), x), lam.size)
        report.check(lhs == rhs, lambda: f"S{lam}({x}[1]) = {lhs} != {rhs}")
    return report


def coproduct(rng: random.Random, cases: int = 100, max_size: int = 5) -> SuiteReport:
    report = SuiteReport("coproduct")
    for _ in range(cases):
        x, y = random_object(rng, 2), random_object(rng, 2)
        lam = random_partition(rng, max_size)
        pieces = []
        for k in range(lam.size + 1):
            for mu in partitions_of(k):
                for eta in partitions_of(lam.size - k):
                    c = lr_coefficient(lam, mu, eta)
                    if c:
                        term = tensor(schur_apply(mu, x), schur_apply(eta, y))
                        pieces.extend([term] * c)
        lhs = schur_apply(lam, direct_sum(x, y))
        rhs = direct_sum(*pieces)
        report.check(lhs == rhs, lambda: f"S{lam}({x} + {y}): {lhs} != {rhs}")
    return report


def lr_character_agreement(max_size: int = 6) -> SuiteReport:
    report = SuiteReport("LR vs characters")
    for n in range(max_size + 1):
        for lam in partitions_of(n):
            for k in range(n + 1):
                for mu in partitions_of(k):
                    for eta in partitions_of(n - k):
                        a = lr_coefficient(lam, mu, eta)
                        b = lr_coefficient_by_characters(lam, mu, eta)
                        report.check(a == b, lambda: f"[{lam}:{mu},{eta}] {a} != {b}")
    return report


def lambda_ring_properties(rng: random.Random, cases: int = 100, order: int = 12) -> SuiteReport:
    report = SuiteReport("lambda-ring properties")
    for _ in range(cases):
        x, y = random_laurent(rng), random_laurent(rng)
        lx, ly = lambda_t(x, order), lambda_t(y, order)
        report.check(lambda_t(x + y, order) == lx * ly,
                     lambda: f"lambda_t({x} + {y}) is not the product")
        report.check(product_formula_check(x, order), lambda: f"product formula for {x}")
        one = TruncatedSeries.one(order)
        report.check(zeta(x, order) * lx.at_minus_t() == one,
                     lambda: f"zeta * lambda_(-t) != 1 for {x}")
        for n in (1, 2):
            for m in (1, 2):
                report.check(verify_lambda_ring(x, y, n, m),
                             lambda: f"lambda-ring axioms n={n} m={m} for {x}, {y}")
    return report


def pipeline_agreement(rng: random.Random, cases: int = 100, max_size: int = 5) -> SuiteReport:
    report = SuiteReport("Jacobi-Trudi vs tableaux")
    for _ in range(cases):
        x, lam = random_object(rng), random_partition(rng, max_size)
        lhs = schur_op(lam, k0_class(x))
        rhs = k0_class(schur_apply(lam, x))
        report.check(lhs == rhs, lambda: f"s{lam}({x}): {lhs} != {rhs}")
    return report


def zeta_rationality(rng: random.Random, cases: int = 50, order: int = 20) -> SuiteReport:
    report = SuiteReport("zeta rationality")
    for _ in range(cases):
        x = random_object(rng, 4)
        r = zeta_rational(x)
        ok = r.denominator[0] == ONE and r.expand(order) == zeta(k0_class(x), order)
        report.check(ok, lambda: f"zeta of {x}")
    return report


def lambda_sigma_multiplicativity(rng: random.Random, cases: int = 25,
                                  order: int = 4) -> SuiteReport:
    report = SuiteReport("lambda_sigma multiplicativity")
    for _ in range(cases):
        x, y = random_object(rng, 2), random_object(rng, 2)
        lhs = lambda_sigma(direct_sum(x, y), order)
        rhs = lambda_sigma(x, order) * lambda_sigma(y, order)
        report.check(lhs == rhs, lambda: f"lambda_sigma({x} + {y})")
    return report


def run_all(seed: int = 0, max_dim: int = 3, max_size: int = 4,
            budget: Budget = DEFAULT_BUDGET) -> list[SuiteReport]:
    """Everything ``tatemotive verify`` reports, in a fixed order."""
    rng = random.Random(seed)
    return [
        triple_agreement(max_dim, max_size, budget),
        lambda_ring_properties(rng),
        shift_duality(rng),
        pipeline_agreement(rng),
        zeta_rationality(rng),
    ]
