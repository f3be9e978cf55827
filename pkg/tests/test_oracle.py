import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from springer_zmodel.oracle import length_generating_function, monomial_values, random_point_rank
from springer_zmodel.verify import model
from springer_zmodel.zmodel import hilbert_dim, weyl_group

import numpy as np


def test_examples(a1, c3_levi):
    assert random_point_rank(a1, 0) == 1
    assert random_point_rank(a1, 2) == hilbert_dim(a1, 2) == 2
    assert random_point_rank(c3_levi, 1) == hilbert_dim(c3_levi, 1) == 4


def test_length_polynomials():
    assert length_generating_function(weyl_group("A", 1)) == [1, 1]
    assert length_generating_function(weyl_group("A", 2)) == [1, 2, 2, 1]
    c3 = length_generating_function(weyl_group("C", 3))
    assert sum(c3) == 48 and len(c3) - 1 == 9


def test_too_few_samples(c3_levi):
    with pytest.raises(ValueError):
        random_point_rank(model("B", 2, ()), 2, samples=1)


def test_deterministic(c3_levi):
    assert random_point_rank(c3_levi, 3, seed=5) == random_point_rank(c3_levi, 3, seed=5)


def test_monomial_values_match_direct_powers():
    pts = np.array([[2, 3], [5, 7]], dtype=np.int64)
    p = 101
    vals = monomial_values(pts, 2, p)
    # grlex: x0^2, x0 x1, x1^2
    assert vals[:, 0].tolist() == [4, 10, 25]
    assert vals[:, 1].tolist() == [9, 21, 49]


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([("A", 2, ()), ("A", 2, (1,)), ("B", 2, (1,)), ("C", 3, (1, 2)), ("A", 3, (1, 3))]),
       st.integers(0, 4), st.integers(0, 10**6))
def test_oracle_agrees_with_exact(key, d, seed):
    zm = model(*key)
    assert random_point_rank(zm, d, seed=seed) == hilbert_dim(zm, d)
