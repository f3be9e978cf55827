import numpy as np
import pytest

from springer_zmodel.roots import (
    InvalidPartition,
    UnsupportedType,
    GroupTooLarge,
    build_root_system,
    conjugacy_classes,
    enumerate_weyl,
    inversion_count,
    levi_order,
    load_weyl,
    parabolic_data,
    partition_to_levi,
)
from springer_zmodel.zmodel import weyl_group


@pytest.mark.parametrize("series,rank,npos,order", [
    ("A", 1, 1, 2), ("A", 2, 3, 6), ("A", 3, 6, 24), ("B", 2, 4, 8),
    ("C", 3, 9, 48), ("G", 2, 6, 12), ("D", 4, 12, 192),
])
def test_root_counts_and_group_orders(series, rank, npos, order):
    rs = build_root_system(series, rank)
    assert len(rs.positive_roots) == npos
    W = weyl_group(series, rank)
    assert len(W) == order
    assert W.lengths[W.longest] == npos


def test_c_long_root_is_last():
    rs = build_root_system("C", 3)
    g = rs.gram
    assert g[2][2] == 2 * g[0][0] == 2 * g[1][1]
    # Bourbaki Cartan: 2(a_i, a_j)/(a_j, a_j)
    assert rs.cartan[2][1] == -2 and rs.cartan[1][2] == -1


def test_a2_lengths_and_inversions():
    W = weyl_group("A", 2)
    assert tuple(sorted(W.lengths)) == (0, 1, 1, 2, 2, 3)
    rs = W.root_system
    for m, ln in zip(W.elements, W.lengths):
        assert inversion_count(rs, m) == ln


def test_generators_are_involutions():
    W = weyl_group("C", 3)
    for i in range(3):
        s = W.generator(i)
        assert W.mul(s, s) == W.identity()
        assert W.lengths[s] == 1


def test_unsupported_and_too_large():
    with pytest.raises(UnsupportedType):
        build_root_system("Q", 2)
    with pytest.raises(UnsupportedType):
        build_root_system("B", 1)
    with pytest.raises(GroupTooLarge):
        enumerate_weyl(build_root_system("A", 4), cap=100)


@pytest.mark.parametrize("series,rank,ncls,sizes", [
    ("A", 1, 2, (1, 1)), ("A", 2, 3, (1, 3, 2)), ("C", 3, 10, None), ("B", 2, 5, None),
])
def test_conjugacy_classes(series, rank, ncls, sizes):
    W = weyl_group(series, rank)
    cc = conjugacy_classes(W)
    assert len(cc) == ncls
    assert cc.classes[0] == (W.identity(),) or list(cc.classes[0]) == [W.identity()]
    assert sum(cc.sizes) == len(W)
    if sizes is not None:
        assert tuple(sorted(cc.sizes[1:])) == tuple(sorted(sizes[1:]))
        assert cc.sizes[0] == 1


def test_parabolic_examples():
    W = weyl_group("C", 3)
    borel = parabolic_data(W, ())
    assert len(borel.elements_wl) == 1 and len(borel.coset_reps) == 48 and borel.dim_s == 3
    full = parabolic_data(W, (1, 2, 3))
    assert len(full.elements_wl) == 48 and len(full.coset_reps) == 1 and full.dim_s == 0
    pd = parabolic_data(W, (1, 2))
    assert len(pd.elements_wl) == 6 and len(pd.coset_reps) == 8 and pd.dim_s == 1


@pytest.mark.parametrize("series,rank,subset", [("C", 3, (1, 2)), ("A", 3, (1, 3)), ("B", 2, (2,))])
def test_parabolic_invariants(series, rank, subset):
    W = weyl_group(series, rank)
    pd = parabolic_data(W, subset)
    for v in pd.elements_wl:
        assert np.array_equal(W.elements[v] @ pd.center_basis, pd.center_basis)
    cosets = {frozenset(W.mul(u, v) for v in pd.elements_wl) for u in pd.coset_reps}
    assert len(cosets) == len(pd.coset_reps) == len(W) // len(pd.elements_wl)
    for u in pd.coset_reps:
        assert W.lengths[u] == min(W.lengths[W.mul(u, v)] for v in pd.elements_wl)


def test_partition_to_levi():
    assert partition_to_levi(3, (1, 1, 1)) == ()
    assert partition_to_levi(3, (3,)) == (1, 2)
    assert partition_to_levi(3, (2, 1)) == (1,)
    assert partition_to_levi(4, (2, 2)) == (1, 3)
    assert levi_order((2, 1, 1)) == 2
    with pytest.raises(InvalidPartition):
        partition_to_levi(4, (2, 1))


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("SPRINGER_ZMODEL_CACHE", str(tmp_path))
    W1 = load_weyl("B", 2)
    assert list(tmp_path.iterdir())
    W2 = load_weyl("B", 2)
    assert W1.lengths == W2.lengths
    assert all(np.array_equal(a, b) for a, b in zip(W1.elements, W2.elements))


@pytest.mark.parametrize("series,rank", [("A", 3), ("C", 3), ("G", 2)])
def test_inverse_and_words(series, rank):
    W = weyl_group(series, rank)
    rs = W.root_system
    for k in range(len(W)):
        assert W.mul(k, W.inverse[k]) == W.identity() == W.mul(W.inverse[k], k)
        m = np.eye(rank, dtype=np.int64)
        for i in W.words[k]:
            m = m @ rs.simple_reflection(i)
        assert np.array_equal(m, W.elements[k])
        assert len(W.words[k]) == W.lengths[k]


def test_cached_inverse(tmp_path, monkeypatch):
    monkeypatch.setenv("SPRINGER_ZMODEL_CACHE", str(tmp_path))
    load_weyl("C", 3)
    W = load_weyl("C", 3)
    assert all(W.mul(k, W.inverse[k]) == 0 for k in range(len(W)))
