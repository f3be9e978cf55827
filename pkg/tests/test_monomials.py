from math import comb

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from springer_zmodel import monomials as mono


def test_counts():
    for n in range(1, 5):
        for d in range(5):
            assert len(mono.monomials(n, d)) == mono.count(n, d) == comb(n + d - 1, d)
    assert mono.count(0, 0) == 1 and mono.count(0, 2) == 0


def test_exponent_round_trip():
    for m in mono.monomials(3, 3):
        e = mono.exponent(m, 3)
        assert sum(e) == 3
        assert mono.monomial_index(3, 3)[m] == mono.monomials(3, 3).index(m)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=3, max_size=3),
       st.integers(0, 3), st.lists(st.integers(-4, 4), min_size=2, max_size=2))
def test_substitution_matches_evaluation(linear, d, s):
    # column t of the substitution matrix holds coefficients of s-monomial t;
    # evaluating at a point must agree with evaluating the monomials of L s
    L = np.array(linear, dtype=np.int64)
    sub = mono.substitution_matrix(L, d)
    x = L @ np.array(s, dtype=np.int64)
    lhs = [int(np.prod([x[i] for i in m])) for m in mono.monomials(3, d)]
    svals = [int(np.prod([s[i] for i in m])) for m in mono.monomials(2, d)]
    rhs = [sum(int(sub[r, c]) * svals[c] for c in range(sub.shape[1])) for r in range(sub.shape[0])]
    assert lhs == rhs
