"""Homogeneous monomial bases and linear substitution of variables.

Monomials of degree ``d`` in ``m`` variables are listed in graded
lexicographic order (``x_1 > x_2 > ...``), represented as sorted tuples of
variable indices.  ``combinations_with_replacement`` yields exactly that
order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

import numpy as np

INT64_SAFE = 2**62


@lru_cache(maxsize=None)
def monomials(nvars: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Degree-``d`` monomials in ``nvars`` variables as sorted index tuples."""
    return tuple(combinations_with_replacement(range(nvars), d))


@lru_cache(maxsize=None)
def monomial_index(nvars: int, d: int) -> dict[tuple[int, ...], int]:
    return {m: k for k, m in enumerate(monomials(nvars, d))}


def exponent(mono: tuple[int, ...], nvars: int) -> tuple[int, ...]:
    e = [0] * nvars
    for i in mono:
        e[i] += 1
    return tuple(e)


def count(nvars: int, d: int) -> int:
    """Number of degree-``d`` monomials in ``nvars`` variables."""
    if nvars == 0:
        return 1 if d == 0 else 0
    return comb(nvars + d - 1, d)


@lru_cache(maxsize=None)
def shift_table(nvars: int, d: int) -> np.ndarray:
    """``T[b, j]`` = index in degree ``d + 1`` of monomial ``b`` times variable ``j``."""
    idx = monomial_index(nvars, d + 1)
    table = np.empty((count(nvars, d), nvars), dtype=np.int64)
    for b, mono in enumerate(monomials(nvars, d)):
        for j in range(nvars):
            table[b, j] = idx[tuple(sorted(mono + (j,)))]
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _split_table(nvars: int, d: int) -> tuple[np.ndarray, np.ndarray]:
    """For each degree-``d`` monomial: its first variable and the index of the rest."""
    idx = monomial_index(nvars, d - 1)
    first = np.array([m[0] for m in monomials(nvars, d)], dtype=np.int64)
    rest = np.array([idx[m[1:]] for m in monomials(nvars, d)], dtype=np.int64)
    return first, rest


def _dtype_for(linear: np.ndarray, d: int):
    rho = int(np.max(np.sum(np.abs(linear.astype(object)), axis=1))) if linear.size else 0
    return np.int64 if rho**d < INT64_SAFE else object


def multiply_by_variable(vectors: np.ndarray, nvars: int, d: int, j: int) -> np.ndarray:
    """Multiply degree-``d`` polynomials (rows of coefficient vectors) by ``s_j``."""
    out = np.zeros((vectors.shape[0], count(nvars, d + 1)), dtype=vectors.dtype)
    out[:, shift_table(nvars, d)[:, j]] = vectors
    return out


def substitution_matrix(linear: np.ndarray, d: int) -> np.ndarray:
    """Matrix of the linear substitution ``v -> sum_j linear[v, j] s_j`` in degree ``d``.

    Rows index degree-``d`` monomials in the ``linear.shape[0]`` source
    variables, columns index degree-``d`` monomials in the ``linear.shape[1]``
    target variables; entry = coefficient of the column monomial in the
    expansion of the row monomial.  Exact (int64 when provably safe, else
    Python integers).
    """
    m, k = linear.shape
    dtype = _dtype_for(linear, d)
    lin = linear.astype(dtype)
    cur = np.ones((1, 1), dtype=dtype)
    if k == 0:
        return cur if d == 0 else np.zeros((count(m, d), 1), dtype=dtype)[:, :0]
    for e in range(1, d + 1):
        first, rest = _split_table(m, e)
        prev = cur[rest]
        shift = shift_table(k, e - 1)
        nxt = np.zeros((len(first), count(k, e)), dtype=dtype)
        for j in range(k):
            nxt[:, shift[:, j]] += prev * lin[first, j][:, None]
        cur = nxt
    return cur
