import pytest

from springer_zmodel.cohomology import (
    InconclusiveDepth,
    betti_table,
    free_module_dims,
    freeness_certificate,
    graded_ring,
    surjectivity_diagnostic,
)
from springer_zmodel.oracle import length_generating_function
from springer_zmodel.verify import model, type_a_model

BETTI = {
    ("A", 1, ()): (1, 1),
    ("A", 2, ()): (1, 2, 2, 1),
    ("A", 2, (1,)): (1, 2),
    ("A", 2, (1, 2)): (1,),
    ("B", 2, ()): (1, 2, 2, 2, 1),
    ("C", 3, (1, 2)): (1, 3, 3, 1),
    ("A", 3, ()): (1, 3, 5, 6, 5, 3, 1),
    ("A", 3, (1, 3)): (1, 3, 2),
    ("A", 3, (1,)): (1, 3, 5, 3),
    ("A", 3, (1, 2)): (1, 3),
}


@pytest.mark.parametrize("key", sorted(BETTI))
def test_betti_tables(key):
    zm = model(*key)
    bt = betti_table(zm)
    assert bt.betti == BETTI[key]
    assert bt.total == zm.components
    assert bt.cohomological_degrees == tuple(range(0, 2 * len(bt.betti), 2))


@pytest.mark.parametrize("key", sorted(BETTI))
def test_freeness(key):
    zm = model(*key)
    cert = freeness_certificate(zm)
    assert cert.passed
    assert cert.numerator == BETTI[key]
    assert cert.numerator_at_one() == zm.components
    assert cert.dims == cert.expected


@pytest.mark.parametrize("series,rank", [("A", 1), ("A", 2), ("B", 2), ("A", 3)])
def test_borel_numerator_is_length_polynomial(series, rank):
    zm = model(series, rank, ())
    assert list(freeness_certificate(zm).numerator) == length_generating_function(zm.weyl)


def test_point_case():
    zm = model("C", 3, (1, 2, 3))
    assert betti_table(zm).betti == (1,)
    cert = freeness_certificate(zm)
    assert cert.passed and cert.numerator == (1,)


def test_c3_levi_dims(c3_levi):
    cert = freeness_certificate(c3_levi)
    assert cert.dims == (1, 4, 7, 8, 8)


def test_inconclusive_depth(c3_levi):
    with pytest.raises(InconclusiveDepth):
        freeness_certificate(c3_levi, depth=2)
    assert freeness_certificate(c3_levi, depth=7).passed


def test_free_module_dims():
    assert free_module_dims([1, 1], 1, 4) == [1, 2, 2, 2, 2]
    assert free_module_dims([1], 2, 3) == [1, 2, 3, 4]
    assert free_module_dims([1, 2], 0, 3) == [1, 2, 0, 0]


def test_diagnostic_examples(a1, c3_levi):
    assert surjectivity_diagnostic(a1, [1, 1]).equal
    assert surjectivity_diagnostic(type_a_model(3, (2, 1)), [1, 2]).summary() == "equal"
    rep = surjectivity_diagnostic(c3_levi, [1, 4, 3])
    assert not rep.equal
    assert rep.first_unequal == 1
    assert rep.summary() == "unequal at degree 1 (model 3 vs claimed 4)"
    assert rep.per_degree == (True, False, True, False)


@pytest.mark.parametrize("key", [("A", 3, (1,)), ("B", 2, ()), ("C", 3, (1, 2))])
def test_probabilistic_path_matches_exact(key):
    zm = model(*key)
    exact = graded_ring(zm)
    fast = graded_ring(zm, probabilistic=True)
    assert exact is not fast
    for d in range(6):
        assert exact.piece(d).betti == fast.piece(d).betti
        assert exact.piece(d).dim_v == fast.piece(d).dim_v


def test_graded_piece_structure(c3_levi):
    ring = graded_ring(c3_levi)
    assert ring is graded_ring(c3_levi)
    for d in range(5):
        pc = ring.piece(d)
        assert pc.basis.shape[0] == pc.dim_v == len(pc.pivots)
        assert pc.lifts.shape[0] == pc.betti == len(pc.lift_monomials)
