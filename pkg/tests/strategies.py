"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
grid_params = st.sampled_from([Fraction(-1), Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1)])


def vectors(n, elements=small_ints):
    return st.lists(elements, min_size=n, max_size=n).map(lambda xs: tuple(Fraction(x) for x in xs))


def matrices(n, m=None, elements=small_ints):
    m = n if m is None else m
    return st.lists(st.lists(elements, min_size=m, max_size=m), min_size=n, max_size=n)
