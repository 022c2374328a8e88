from fractions import Fraction

from hypothesis import strategies as st

from grasskit import Element


def monomials(max_index=8, max_len=4):
    """Strategy for basis monomials: sorted index tuples without repeats."""
    return st.lists(
        st.integers(min_value=1, max_value=max_index),
        max_size=max_len,
        unique=True,
    ).map(lambda xs: tuple(sorted(xs)))


def scalars():
    return st.fractions(
        min_value=-4, max_value=4, max_denominator=3
    ).filter(lambda c: c != 0)


@st.composite
def elements(draw, max_index=8, max_len=4, max_terms=4):
    """Strategy for sparse elements with small support and coefficients."""
    n = draw(st.integers(min_value=0, max_value=max_terms))
    total = Element.zero()
    for _ in range(n):
        mono = draw(monomials(max_index, max_len))
        coeff = draw(scalars())
        total = total + Element.monomial(mono, coeff)
    return total


def bubble_sort_sign(seq):
    """Independent parity oracle: sign of the permutation sorting seq by
    adjacent swaps, or None when an entry repeats."""
    arr = list(seq)
    sign = 1
    n = len(arr)
    for i in range(n):
        for j in range(n - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
            elif arr[j] == arr[j + 1]:
                return None
    return sign
