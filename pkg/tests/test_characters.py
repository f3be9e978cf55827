from fractions import Fraction

import numpy as np
import pytest

from springer_zmodel.characters import (
    ClassFunction,
    MismatchedClasses,
    action_on_H,
    character_of_H,
    classes_of,
    inner_product,
    reflection_character,
    trivial_character,
)
from springer_zmodel.cohomology import betti_table
from springer_zmodel.exact_linalg import ExactMatrix
from springer_zmodel.verify import model, type_a_model
from springer_zmodel.zmodel import weyl_group


def test_a1_reflection_negates(a1):
    W = a1.weyl
    s = W.generator(0)
    assert action_on_H(a1, 1, s) == ExactMatrix.from_rows([[-1]])
    assert action_on_H(a1, 1, W.identity()) == ExactMatrix.identity(1)


@pytest.mark.parametrize("key", [("A", 2, ()), ("C", 3, (1, 2)), ("B", 2, ())])
def test_identity_and_degree_zero(key):
    zm = model(*key)
    bt = betti_table(zm)
    for d, b in enumerate(bt.betti):
        assert action_on_H(zm, d, zm.weyl.identity()) == ExactMatrix.identity(b)
    for w in range(len(zm.weyl)):
        assert action_on_H(zm, 0, w) == ExactMatrix.identity(1)
    assert character_of_H(zm, 0).values == trivial_character(zm.weyl).values


@pytest.mark.parametrize("key,d", [(("A", 2, ()), 1), (("A", 2, ()), 2), (("C", 3, (1, 2)), 1), (("A", 3, (1, 3)), 2)])
def test_action_is_a_representation(key, d):
    zm = model(*key)
    W = zm.weyl
    rng = np.random.default_rng(1)
    for a, b in rng.integers(0, len(W), (8, 2)):
        a, b = int(a), int(b)
        assert action_on_H(zm, d, W.mul(a, b)) == action_on_H(zm, d, a) @ action_on_H(zm, d, b)


def test_c3_degree_one_is_reflection(c3_levi):
    chi = character_of_H(c3_levi, 1)
    refl = reflection_character(c3_levi.weyl)
    assert chi.values == refl.values
    assert inner_product(chi, chi) == 1
    assert chi.degree == 3


def test_a2_degree_one_is_reflection(a2):
    assert character_of_H(a2, 1).values == reflection_character(a2.weyl).values


def test_sl3_hook_degree_one():
    zm = type_a_model(3, (2, 1))
    chi = character_of_H(zm, 1)
    assert chi.degree == 2 and inner_product(chi, chi) == 1


def test_reflection_character_values():
    W = weyl_group("C", 3)
    refl = reflection_character(W)
    cc = classes_of(W)
    assert refl.degree == 3
    s_class = cc.class_of[W.generator(0)]
    assert refl.values[s_class] == 1
    assert refl.values[cc.class_of[W.longest]] == -3
    triv = trivial_character(W)
    assert inner_product(triv, triv) == 1
    assert inner_product(refl, triv) == 0
    assert inner_product(refl, refl) == 1


@pytest.mark.parametrize("key", [("A", 3, ()), ("B", 2, ()), ("A", 3, (1,))])
def test_total_character_is_induced_from_levi(key):
    # sum over degrees of H is the permutation character of W on W/W_L
    zm = model(*key)
    W = zm.weyl
    total = None
    for d in range(len(betti_table(zm).betti)):
        chi = character_of_H(zm, d)
        total = chi if total is None else total + chi
    cc = classes_of(W)
    perm = tuple(Fraction(sum(1 for c, p in enumerate(zm.component_permutation(r)) if p == c))
                 for r in cc.representatives)
    assert total.values == perm


def test_class_function_errors():
    cc2 = classes_of(weyl_group("A", 1))
    with pytest.raises(MismatchedClasses):
        ClassFunction((Fraction(1),), cc2)
    cc3 = classes_of(weyl_group("A", 2))
    with pytest.raises(MismatchedClasses):
        inner_product(trivial_character(weyl_group("A", 1)), ClassFunction((Fraction(1),) * 3, cc3))
