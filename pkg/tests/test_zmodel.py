from math import comb

import numpy as np
import pytest

from springer_zmodel import monomials as mono
from springer_zmodel.roots import build_root_system
from springer_zmodel.zmodel import (
    MismatchedRootSystems,
    build_zmodel,
    evaluation_matrix,
    fiber_points,
    generic_fiber_distinct,
    hilbert_dim,
    restriction_factors,
    weyl_group,
)
from springer_zmodel.verify import model


def test_a1_two_lines(a1):
    assert a1.components == 2 and a1.dim_s == 1
    ys = sorted(int(m[0, 0]) for m in a1.component_maps)
    assert ys == [-1, 1]


def test_full_levi_is_a_point():
    zm = model("B", 2, (1, 2))
    assert zm.components == 1 and zm.dim_s == 0
    assert hilbert_dim(zm, 0) == 1 and hilbert_dim(zm, 1) == 0


def test_c3_levi_has_eight_distinct_lines(c3_levi):
    assert c3_levi.components == 8 and c3_levi.dim_s == 1
    keys = {tuple(m.ravel()) for m in c3_levi.component_maps}
    assert len(keys) == 8


def test_build_from_root_system():
    zm = build_zmodel(build_root_system("A", 2), (1,))
    assert zm.components == 3 and zm.label == "A2[1]"


def test_evaluation_matrix_examples(a1, a2):
    e0 = evaluation_matrix(a1, 0)
    assert e0.shape == (1, 2) and (e0.matrix == 1).all()
    e1 = evaluation_matrix(a1, 1)
    assert e1.shape == (2, 2)
    signs = sorted(tuple(e1.matrix[:, c]) for c in range(2))
    assert signs == [(1, -1), (1, 1)]
    e2 = evaluation_matrix(a2, 2)
    assert e2.shape == (comb(2 * 2 + 2 - 1, 2), 6 * 3) == (10, 18)
    with pytest.raises(ValueError):
        evaluation_matrix(a1, -1)


@pytest.mark.parametrize("d,expected", [(0, 1), (1, 2), (2, 2), (3, 2)])
def test_a1_hilbert(a1, d, expected):
    assert hilbert_dim(a1, d) == hilbert_dim(a1, d, method="direct") == expected


def test_c3_levi_degree_one(c3_levi):
    assert hilbert_dim(c3_levi, 1) == hilbert_dim(c3_levi, 1, method="direct") == 4


@pytest.mark.parametrize("series,rank,subset,top", [
    ("A", 2, (), 4), ("A", 2, (1,), 3), ("B", 2, (), 4), ("C", 3, (1, 2), 4), ("A", 3, (1, 3), 3),
])
def test_graded_matches_direct(series, rank, subset, top):
    zm = model(series, rank, subset)
    for d in range(top + 1):
        assert hilbert_dim(zm, d) == hilbert_dim(zm, d, method="direct")


@pytest.mark.parametrize("series,rank,subset", [("A", 2, ()), ("A", 3, (2,)), ("C", 3, (1, 2)), ("B", 2, (1,))])
def test_hilbert_bounds(series, rank, subset):
    zm = model(series, rank, subset)
    for d in range(5):
        h = hilbert_dim(zm, d)
        # at most the monomial count and the column count, at least the s-part
        assert mono.count(zm.dim_s, d) <= h <= min(mono.count(2 * zm.rank, d), zm.components * mono.count(zm.dim_s, d))


@pytest.mark.parametrize("d", range(4))
def test_restriction_a2(a2, d):
    assert restriction_factors(a2, model("A", 2, (1,)), d)


@pytest.mark.parametrize("d", range(5))
def test_restriction_c3(d):
    assert restriction_factors(model("C", 3, ()), model("C", 3, (1, 2)), d)


def test_restriction_errors(a2):
    with pytest.raises(MismatchedRootSystems):
        restriction_factors(model("B", 2, ()), model("A", 2, (1,)), 1)
    with pytest.raises(ValueError):
        restriction_factors(model("A", 2, (1,)), a2, 1)


@pytest.mark.parametrize("series,rank,subset", [("A", 1, ()), ("C", 3, (1, 2)), ("B", 2, ()), ("A", 3, (1, 3))])
def test_generic_fibers(series, rank, subset):
    zm = model(series, rank, subset)
    assert generic_fiber_distinct(zm, trials=20, seed=3)


def test_fiber_over_zero_collapses(c3_levi):
    pts = fiber_points(c3_levi, [0])
    assert len(set(pts)) == 1


def test_component_permutation_is_action():
    zm = model("C", 3, (1, 2))
    W = zm.weyl
    rng = np.random.default_rng(0)
    for a, b in rng.integers(0, len(W), (20, 2)):
        a, b = int(a), int(b)
        pa, pb, pab = zm.component_permutation(a), zm.component_permutation(b), zm.component_permutation(W.mul(a, b))
        # coset(b^-1 a^-1 u_c): first a^-1, then b^-1
        assert pab == [pb[pa[c]] for c in range(zm.components)]
    assert zm.component_permutation(W.identity()) == list(range(zm.components))


def test_weyl_group_is_cached():
    assert weyl_group("A", 2) is weyl_group("A", 2)
