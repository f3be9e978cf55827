"""The arrangement Z_l = {(x, wx) : w in W, x in s} and its coordinate ring.

Z_l is a finite union of linear graphs over the Levi center ``s``, one per
coset ``wW_L`` (elements of W_L fix ``s`` pointwise).  A polynomial on
``t + t`` is recorded on each component by substituting
``x -> B s``, ``y -> w_c B s`` where ``B`` is the integer center basis and
``s`` are coordinates on ``s``.  Degree ``d`` pieces of the coordinate ring
are therefore row spaces of integer matrices whose columns are indexed by
``(component, s-monomial)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from springer_zmodel import monomials as mono
from springer_zmodel.exact_linalg import column_space_contains, rank_exact
from springer_zmodel.roots import (
    DegenerateComponents,
    ParabolicData,
    RootSystem,
    WeylGroup,
    load_weyl,
    parabolic_data,
)

__all__ = [
    "ZModel",
    "EvaluationMatrix",
    "MismatchedRootSystems",
    "weyl_group",
    "build_zmodel",
    "evaluation_matrix",
    "y_block",
    "hilbert_dim",
    "restriction_factors",
    "fiber_points",
]


class MismatchedRootSystems(ValueError):
    pass


@lru_cache(maxsize=16)
def weyl_group(series: str, rank: int) -> WeylGroup:
    return load_weyl(series.upper(), rank)


@dataclass(frozen=True, eq=False)
class ZModel:
    """Components of Z_l with their linear maps on ``s``.

    ``component_maps[c]`` is ``w_c @ center_basis`` (shape ``rank x dim_s``)
    for the ``c``-th minimal coset representative, and ``coset_of[w]`` is the
    component index of the coset ``w W_L``.
    """

    parabolic: ParabolicData
    component_maps: tuple[np.ndarray, ...]
    coset_of: tuple[int, ...] = field(repr=False)

    @property
    def weyl(self) -> WeylGroup:
        return self.parabolic.weyl

    @property
    def root_system(self) -> RootSystem:
        return self.weyl.root_system

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def dim_s(self) -> int:
        return self.parabolic.dim_s

    @property
    def center_basis(self) -> np.ndarray:
        return self.parabolic.center_basis

    @property
    def components(self) -> int:
        return len(self.component_maps)

    @property
    def label(self) -> str:
        levi = ",".join(str(i) for i in self.parabolic.subset)
        return f"{self.root_system.name}[{levi}]"

    def component_permutation(self, w: int) -> list[int]:
        """``pi[c]`` such that ``(w . f)`` on component ``c`` equals ``f`` on ``pi[c]``.

        Functions pull back: ``(w . f)(x, y) = f(x, w^-1 y)``, and on the
        component of ``u W_L`` this lands on the component of ``w^-1 u W_L``.
        """
        W = self.weyl
        winv = W.inverse[w]
        return [self.coset_of[W.mul(winv, u)] for u in self.parabolic.coset_reps]


def build_zmodel(rs: RootSystem | WeylGroup, subset=()) -> ZModel:
    """One component per minimal coset representative of W/W_L.

    Raises :class:`DegenerateComponents` if two representatives agree on ``s``
    instead of silently merging them.
    """
    W = rs if isinstance(rs, WeylGroup) else weyl_group(rs.series, rs.rank)
    par = parabolic_data(W, subset)
    maps = []
    seen: dict[tuple[int, ...], int] = {}
    for c, u in enumerate(par.coset_reps):
        m = W.elements[u] @ par.center_basis
        m.setflags(write=False)
        key = tuple(int(a) for a in m.ravel())
        if par.dim_s and key in seen:
            raise DegenerateComponents(
                f"coset representatives {seen[key]} and {c} agree on the Levi center"
            )
        seen[key] = c
        maps.append(m)
    if par.dim_s == 0:
        maps = maps[:1]
    coset_of = [-1] * len(W)
    for c, u in enumerate(par.coset_reps):
        for v in par.elements_wl:
            coset_of[W.mul(u, v)] = c
    if par.dim_s == 0:
        coset_of = [0] * len(W)
    return ZModel(par, tuple(maps), tuple(coset_of))


@dataclass(frozen=True)
class EvaluationMatrix:
    """Degree-``d`` substitution matrix of C[t + t] onto the components.

    Rows: monomials in ``x_1..x_n, y_1..y_n`` (grlex).  Columns:
    ``(component, s-monomial)`` pairs, component-major.
    """

    degree: int
    matrix: np.ndarray
    row_monomials: tuple[tuple[int, ...], ...]
    col_labels: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


def _blocks_hstack(blocks: list[np.ndarray]) -> np.ndarray:
    dtype = object if any(b.dtype == object for b in blocks) else np.int64
    return np.hstack([b.astype(dtype) for b in blocks])


def evaluation_matrix(zm: ZModel, d: int) -> EvaluationMatrix:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    n, k = zm.rank, zm.dim_s
    blocks = [
        mono.substitution_matrix(np.vstack([zm.center_basis, m]), d)
        for m in zm.component_maps
    ]
    mat = _blocks_hstack(blocks)
    cols = tuple((c, s) for c in range(zm.components) for s in mono.monomials(k, d))
    return EvaluationMatrix(d, mat, mono.monomials(2 * n, d), cols)


def y_block(zm: ZModel, d: int) -> np.ndarray:
    """Rows of :func:`evaluation_matrix` for the monomials in ``y`` alone."""
    return _blocks_hstack([mono.substitution_matrix(m, d) for m in zm.component_maps])


def hilbert_dim(zm: ZModel, d: int, method: str = "graded") -> int:
    """``dim C[Z_l]_d``, the rank of the degree-``d`` evaluation matrix.

    ``method="direct"`` ranks :func:`evaluation_matrix` itself;
    ``"graded"`` reuses the certified degree-by-degree bases built for the
    cohomology computation (same number, far smaller matrices).
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if method == "direct":
        return rank_exact(evaluation_matrix(zm, d).matrix)
    if method == "graded":
        from springer_zmodel.cohomology import graded_ring

        return graded_ring(zm).piece(d).dim_v
    raise ValueError(f"unknown method {method!r}")


def restriction_factors(zm_big: ZModel, zm_small: ZModel, d: int) -> bool:
    """Whether ``Ker(eval on Z)_d`` lies in ``Ker(eval on Z_l)_d``.

    Kernels here are spaces of polynomials (left kernels), so the inclusion
    is equivalent to the columns of the small evaluation matrix lying in the
    column span of the big one.
    """
    if zm_big.root_system.name != zm_small.root_system.name:
        raise MismatchedRootSystems(f"{zm_big.root_system.name} vs {zm_small.root_system.name}")
    if zm_big.parabolic.subset:
        raise ValueError("the first model must be the Borel case (empty Levi subset)")
    big = evaluation_matrix(zm_big, d).matrix
    small = evaluation_matrix(zm_small, d).matrix
    if small.shape[1] == 0:
        return True
    return column_space_contains(big, small)


def random_center_point(zm: ZModel, rng: random.Random, bound: int = 10**6) -> list[Fraction]:
    """Random rational point of ``s`` in center-basis coordinates, no zero coordinate."""
    out = []
    for _ in range(zm.dim_s):
        num = 0
        while num == 0:
            num = rng.randint(-bound, bound)
        out.append(Fraction(num, rng.randint(1, bound)))
    return out


def fiber_points(zm: ZModel, s_coords) -> list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
    """The points ``(x, w_c x)`` of Z_l over ``x = B s``, one per component."""
    b = zm.center_basis
    x = tuple(sum((Fraction(int(b[i, j])) * s_coords[j] for j in range(zm.dim_s)), Fraction(0))
              for i in range(zm.rank))
    pts = []
    for m in zm.component_maps:
        y = tuple(sum((Fraction(int(m[i, j])) * s_coords[j] for j in range(zm.dim_s)), Fraction(0))
                  for i in range(zm.rank))
        pts.append((x, y))
    return pts


def generic_fiber_distinct(zm: ZModel, trials: int = 20, seed: int = 0) -> bool:
    """Fibers of pi_1 over random points of ``s`` have exactly ``#components`` points."""
    rng = random.Random(seed)
    for _ in range(trials):
        pts = fiber_points(zm, random_center_point(zm, rng))
        if len(set(pts)) != zm.components:
            return False
    return True
