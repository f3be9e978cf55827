"""W-action on the graded model and class-function comparisons.

``w`` acts on functions by pull-back, ``(w . f)(x, y) = f(x, w^-1 y)``; on the
component model this permutes the blocks (see
:meth:`ZModel.component_permutation`).  The action on ``H_d = V_d / U_d`` is
read off from exact coordinates of the permuted lifts in the basis of
``V_d``, keeping only the lift coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from weakref import WeakKeyDictionary

import numpy as np

from springer_zmodel import monomials as mono
from springer_zmodel.cohomology import graded_ring
from springer_zmodel.exact_linalg import ExactMatrix
from springer_zmodel.roots import ConjugacyClasses, WeylGroup, conjugacy_classes
from springer_zmodel.zmodel import ZModel

__all__ = [
    "ClassFunction",
    "MismatchedClasses",
    "NotAClassFunction",
    "classes_of",
    "action_on_H",
    "character_of_H",
    "reflection_character",
    "trivial_character",
    "inner_product",
]


class MismatchedClasses(ValueError):
    pass


class NotAClassFunction(AssertionError):
    pass


@dataclass(frozen=True)
class ClassFunction:
    """Rational values indexed by the conjugacy classes of ``classes``."""

    values: tuple[Fraction, ...]
    classes: ConjugacyClasses

    def __post_init__(self):
        if len(self.values) != len(self.classes):
            raise MismatchedClasses("one value per conjugacy class required")

    @property
    def degree(self) -> Fraction:
        """Value at the identity class (the dimension for a genuine character)."""
        return self.values[0]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _check_same(self, other)
        return ClassFunction(tuple(a + b for a, b in zip(self.values, other.values)), self.classes)

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        _check_same(self, other)
        return ClassFunction(tuple(a - b for a, b in zip(self.values, other.values)), self.classes)


def _check_same(f: ClassFunction, g: ClassFunction) -> None:
    if len(f.values) != len(g.values) or f.classes.sizes != g.classes.sizes:
        raise MismatchedClasses(f"{len(f.values)} vs {len(g.values)} classes")


_CLASSES: "WeakKeyDictionary[WeylGroup, ConjugacyClasses]" = WeakKeyDictionary()


def classes_of(W: WeylGroup) -> ConjugacyClasses:
    """Conjugacy classes of ``W``, computed once per group object."""
    cc = _CLASSES.get(W)
    if cc is None:
        cc = _CLASSES[W] = conjugacy_classes(W)
    return cc


def _permute_rows(zm: ZModel, rows: np.ndarray, d: int, w: int) -> np.ndarray:
    kd = mono.count(zm.dim_s, d)
    pi = zm.component_permutation(w)
    cols = np.concatenate([np.arange(pi[c] * kd, (pi[c] + 1) * kd) for c in range(zm.components)])
    return rows[:, cols]


def _action_matrices(zm: ZModel, d: int, elements: list[int]) -> list[list[list[Fraction]]]:
    ring = graded_ring(zm)
    pc = ring.piece(d)
    b = pc.betti
    if b == 0:
        return [[] for _ in elements]
    lifts = pc.lifts
    images = np.vstack([_permute_rows(zm, lifts, d, w) for w in elements])
    coords = ring.coordinates(d, images)
    out = []
    for k in range(len(elements)):
        block = coords[k * b:(k + 1) * b]
        # column i holds the H-coordinates of w . h_i
        out.append([[block[i][pc.dim_u + j] for i in range(b)] for j in range(b)])
    return out


def action_on_H(zm: ZModel, d: int, w: int) -> ExactMatrix:
    """Matrix of ``w`` (an index into ``zm.weyl``) on the chosen basis of ``H_d``.

    The basis is given by the lifts in ``graded_ring(zm).piece(d)``; column
    ``i`` holds the coordinates of ``w . h_i``.
    """
    (mat,) = _action_matrices(zm, d, [w])
    b = graded_ring(zm).piece(d).betti
    return ExactMatrix.from_rows(mat, cols=b) if b else ExactMatrix.zeros(0, 0)


def character_of_H(zm: ZModel, d: int, check_members: bool = True, seed: int = 0) -> ClassFunction:
    """Trace of the action on ``H_d`` at each class representative.

    With ``check_members`` the trace is also evaluated at a second, randomly
    chosen member of each class and :class:`NotAClassFunction` is raised on
    any difference.
    """
    W = zm.weyl
    cc = classes_of(W)
    reps = list(cc.representatives)
    rng = random.Random(seed)
    others = [rng.choice(c) for c in cc.classes] if check_members else []
    mats = _action_matrices(zm, d, reps + others)
    traces = [sum((m[i][i] for i in range(len(m))), Fraction(0)) for m in mats]
    values = traces[: len(reps)]
    if check_members:
        for k, (a, b) in enumerate(zip(values, traces[len(reps):])):
            if a != b:
                raise NotAClassFunction(f"degree {d}, class {k}: trace {a} vs {b}")
    return ClassFunction(tuple(values), cc)


def reflection_character(W: WeylGroup) -> ClassFunction:
    cc = classes_of(W)
    vals = tuple(Fraction(int(np.trace(W.elements[r]))) for r in cc.representatives)
    return ClassFunction(vals, cc)


def trivial_character(W: WeylGroup) -> ClassFunction:
    cc = classes_of(W)
    return ClassFunction((Fraction(1),) * len(cc), cc)


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """``(1/|W|) sum_classes size * f * g``; Weyl group characters are real."""
    _check_same(f, g)
    order = sum(f.classes.sizes)
    total = sum((s * a * b for s, a, b in zip(f.classes.sizes, f.values, g.values)), Fraction(0))
    return total / order
