from __future__ import annotations

from hypothesis import strategies as st

from tatemotive.graded import GradedTateObject
from tatemotive.laurent import LaurentPolynomial
from tatemotive.partitions import partitions_of


def objects(max_gens: int = 3, degrees=(-2, 3), weights=(-2, 2)):
    gen = st.tuples(st.integers(*degrees), st.integers(*weights))
    return st.lists(gen, max_size=max_gens).map(
        lambda gens: GradedTateObject({g: gens.count(g) for g in gens}))


def partitions(min_size: int = 0, max_size: int = 6):
    return st.integers(min_size, max_size).flatmap(
        lambda n: st.sampled_from(partitions_of(n)))


def laurent(exponents=(-3, 3), coefficients=(-3, 3), max_terms: int = 3):
    return st.dictionaries(st.integers(*exponents), st.integers(*coefficients),
                           max_size=max_terms).map(LaurentPolynomial)


