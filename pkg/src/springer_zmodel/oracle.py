"""Independent checks of the graded dimensions.

``random_point_rank`` never touches the substitution matrices: it samples
points on each component modulo a prime and ranks the values of all
degree-``d`` monomials there.  ``length_generating_function`` is the
classical Poincare polynomial of G/B, the expected numerator in the Borel
case.
"""

from __future__ import annotations

import random

import numpy as np
from flint import nmod_mat

from springer_zmodel import monomials as mono
from springer_zmodel.exact_linalg import PRIME_POOL
from springer_zmodel.roots import WeylGroup
from springer_zmodel.zmodel import ZModel

__all__ = ["OracleDisagreement", "random_point_rank", "length_generating_function", "monomial_values"]


class OracleDisagreement(AssertionError):
    pass


def monomial_values(points: np.ndarray, d: int, prime: int) -> np.ndarray:
    """Values mod ``prime`` of every degree-``d`` monomial (grlex) at each column of ``points``."""
    nvars, npts = points.shape
    cur = np.ones((1, npts), dtype=np.int64)
    for e in range(1, d + 1):
        idx = mono.monomial_index(nvars, e - 1)
        first = [m[0] for m in mono.monomials(nvars, e)]
        rest = [idx[m[1:]] for m in mono.monomials(nvars, e)]
        cur = (points[first] * cur[rest]) % prime
    return cur


def random_point_rank(
    zm: ZModel,
    d: int,
    samples: int | None = None,
    prime: int | None = None,
    seed: int = 0,
) -> int:
    """Rank of degree-``d`` monomials evaluated at random points of Z_l, mod ``prime``.

    ``samples`` points are drawn on every component (default: the number of
    degree-``d`` monomials on ``s``, the least that can separate them).
    Deterministic for a given seed.
    """
    rng = random.Random(seed)
    if prime is None:
        prime = rng.choice(PRIME_POOL)
    need = mono.count(zm.dim_s, d)
    if samples is None:
        samples = need
    if samples < need:
        raise ValueError(f"need at least {need} samples per component, got {samples}")
    n, k = zm.rank, zm.dim_s
    cols = []
    for m in zm.component_maps:
        s = np.array([[rng.randrange(prime) for _ in range(samples)] for _ in range(k)], dtype=object)
        s = s.reshape(k, samples)
        x = zm.center_basis.astype(object) @ s if k else np.zeros((n, samples), dtype=object)
        y = m.astype(object) @ s if k else np.zeros((n, samples), dtype=object)
        pts = np.vstack([x, y]) % prime
        cols.append(pts.astype(np.int64))
    points = np.hstack(cols)
    vals = monomial_values(points, d, prime)
    return nmod_mat(vals.tolist(), prime).rank() if vals.size else 0


def length_generating_function(W: WeylGroup) -> list[int]:
    """Coefficients of ``sum_w t^length(w)``."""
    top = max(W.lengths)
    out = [0] * (top + 1)
    for ln in W.lengths:
        out[ln] += 1
    return out
