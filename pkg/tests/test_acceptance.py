"""Acceptance criteria, one test each, all checked by exact equality.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per
criterion.
"""
import random
import subprocess
import sys
from math import factorial

from tatemotive.cli import run
from tatemotive.graded import k0_class, parse_expression, preset, shift
from tatemotive.k0_lambda import lambda_t
from tatemotive.laurent import ONE, TAU, ZERO
from tatemotive.oracle import SuperWeightedSpace, young_symmetrizer_rank
from tatemotive.partitions import diagram_contains, irreducible_dimension, partitions_of
from tatemotive.schur import alt_power, schur_apply, schur_vanishes, sym_power
from tatemotive.verification import (
    coproduct,
    lambda_ring_properties,
    lambda_sigma_multiplicativity,
    lr_character_agreement,
    pipeline_agreement,
    random_object,
    shift_duality,
    triple_agreement,
    zeta_rationality,
)


def report(number, title, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"\n{status} criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def suite_ok(*reports):
    failures = [f for r in reports for f in r.failures[:3]]
    cases = sum(r.cases for r in reports)
    return not failures, f"{cases} cases" + (f"; first failures: {failures}" if failures else "")


def test_criterion_01_preset_classes():
    ok = all(
        k0_class(preset("P", n)) == sum((TAU ** i for i in range(n + 1)), ZERO)
        and k0_class(preset("Am0", n)) == ONE - TAU ** n
        for n in range(11)
    )
    report(1, "preset K0 classes for n <= 10", ok)


def test_criterion_02_lambda_base_cases():
    plus = lambda_t(ONE, 16).coefficients
    minus = lambda_t(-ONE, 16).coefficients
    ok = (list(plus) == [ONE, ONE] + [ZERO] * 15
          and list(minus) == [ONE if n % 2 == 0 else -ONE for n in range(17)])
    report(2, "lambda_t(1) and lambda_t(-1) to order 16", ok)


def test_criterion_03_triple_agreement():
    ok, detail = suite_ok(triple_agreement(max_dim=3, max_size=4))
    report(3, "criterion, tableaux and oracle agree on the grid", ok, detail)


def test_criterion_04_example_vanishing():
    x = parse_expression("Q(0)[1] + Q(2)[2]")
    checked, ok = 0, True
    for n in range(1, 7):
        for lam in partitions_of(n):
            expected = diagram_contains(lam, (2, 2))
            ok &= schur_apply(lam, x).is_zero() == expected == schur_vanishes(lam, x)
            checked += 1
    report(4, "Q(0)[1] + Q(2)[2] vanishes exactly on lam containing 2x2", ok, f"{checked} partitions")


def test_criterion_05_shift_duality():
    rng = random.Random(5)
    alt_sym = all(
        alt_power(shift(x, 1), n) == shift(sym_power(x, n), n)
        for x in (random_object(rng) for _ in range(50)) for n in range(5)
    )
    ok, detail = suite_ok(shift_duality(random.Random(50), cases=200, max_size=5))
    report(5, "shift duality and Alt/Sym under shift", ok and alt_sym, detail)


def test_criterion_06_coproduct():
    ok, detail = suite_ok(coproduct(random.Random(6), cases=100, max_size=5),
                          lr_character_agreement(max_size=6))
    report(6, "coproduct with LR multiplicities; LR vs characters", ok, detail)


def test_criterion_07_lambda_ring():
    ok, detail = suite_ok(lambda_ring_properties(random.Random(7), cases=100, order=12))
    report(7, "lambda-ring properties on 100 random pairs", ok, detail)


def test_criterion_08_pipeline():
    ok, detail = suite_ok(pipeline_agreement(random.Random(8), cases=100, max_size=5))
    report(8, "determinant path equals tableau path", ok, detail)


def test_criterion_09_zeta_rationality():
    ok, detail = suite_ok(zeta_rationality(random.Random(9), cases=50, order=20))
    report(9, "rational zeta reproduces the series to order 20", ok, detail)


def test_criterion_10_lambda_sigma():
    ok, detail = suite_ok(lambda_sigma_multiplicativity(random.Random(10), cases=25, order=4))
    report(10, "lambda_Sigma multiplicative to order 4", ok, detail)


def test_criterion_11_rep_theory():
    squares = all(sum(irreducible_dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)
                  for n in range(1, 9))
    schur_weyl = True
    for n in range(1, 5):
        for dim in range(1, 4):
            for odd in range(dim + 1):
                space = SuperWeightedSpace.from_counts(dim - odd, odd)
                total = sum(young_symmetrizer_rank(lam, space) * irreducible_dimension(lam)
                            for lam in partitions_of(n))
                schur_weyl &= total == dim ** n
    report(11, "sum of squared dimensions and Schur-Weyl completeness", squares and schur_weyl)


def test_criterion_12_cli():
    documented = [
        (["k0", "P:3"], "1 + tau + tau^2 + tau^3"),
        (["classify", "Q(0)[1] + Q(2)[2]"],
         "d_plus: 1\nd_minus: 1\nevenly_finite: false\noddly_finite: false\n"
         "alt_vanishing_index: none\nsym_vanishing_index: none\n"
         "kimura_dimension: 2\nsquare_vanishing_index: 2"),
        (["zeta", "Gm", "--rational"], "numerator: 1 - tau*t\ndenominator: 1 - t"),
    ]
    outputs_ok = all(run(argv) == (expected, 0) for argv, expected in documented)
    proc = subprocess.run([sys.executable, "-m", "tatemotive", "verify"],
                          capture_output=True, text=True, check=False)
    report(12, "documented CLI output and verify exit code", outputs_ok and proc.returncode == 0,
           f"verify exit {proc.returncode}")
