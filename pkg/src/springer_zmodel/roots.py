"""Root systems, Weyl groups, parabolic subgroups and Levi centers.

Conventions
-----------
Simple roots are numbered as in Bourbaki's tables (1-based in the public API).
For ``C_n`` the last simple root is the long one, for ``B_n`` it is short; in
``G_2`` the first simple root is short; in ``F_4`` roots 1, 2 are long.

The Cartan matrix is ``cartan[i][j] = <alpha_i, alpha_j^vee>``.  The Weyl
group acts on the Cartan subalgebra ``t`` written in the basis of simple
coroots, so every element is an integer matrix and the simple reflection
``s_i`` sends ``x`` to ``x - alpha_i(x) alpha_i^vee``.  Lengths are inversion
counts on the positive coroots, which equal inversion counts on roots.
"""

from __future__ import annotations

import itertools
import json
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from pathlib import Path

import numpy as np

from springer_zmodel.exact_linalg import ExactMatrix, kernel_basis

__all__ = [
    "UnsupportedType",
    "GroupTooLarge",
    "InvalidPartition",
    "DegenerateComponents",
    "RootSystem",
    "WeylGroup",
    "ParabolicData",
    "ConjugacyClasses",
    "build_root_system",
    "enumerate_weyl",
    "parabolic_data",
    "conjugacy_classes",
    "partition_to_levi",
    "DEFAULT_GROUP_CAP",
]

DEFAULT_GROUP_CAP = 10**6


class UnsupportedType(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    pass


class InvalidPartition(ValueError):
    pass


class DegenerateComponents(RuntimeError):
    """Two coset representatives induce the same linear map on the Levi center."""


def _gram(series: str, n: int) -> np.ndarray:
    """Symmetrized Gram matrix of the simple roots (integer, Bourbaki numbering)."""
    g = np.zeros((n, n), dtype=np.int64)
    if series == "A":
        for i in range(n):
            g[i, i] = 2
        for i in range(n - 1):
            g[i, i + 1] = g[i + 1, i] = -1
    elif series == "B":
        for i in range(n - 1):
            g[i, i] = 4
        g[n - 1, n - 1] = 2
        for i in range(n - 1):
            g[i, i + 1] = g[i + 1, i] = -2
    elif series == "C":
        for i in range(n - 1):
            g[i, i] = 2
        g[n - 1, n - 1] = 4
        for i in range(n - 2):
            g[i, i + 1] = g[i + 1, i] = -1
        g[n - 2, n - 1] = g[n - 1, n - 2] = -2
    elif series == "D":
        for i in range(n):
            g[i, i] = 2
        for i in range(n - 2):
            g[i, i + 1] = g[i + 1, i] = -1
        g[n - 3, n - 1] = g[n - 1, n - 3] = -1
    elif series == "G":
        g[:] = [[2, -3], [-3, 6]]
    elif series == "F":
        g[:] = [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
    elif series == "E":
        for i in range(n):
            g[i, i] = 2
        # Bourbaki: 1-3-4-5-6-7-8 chain with 2 attached to 4 (0-based below)
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            g[i, j] = g[j, i] = -1
    return g


def _check_type(series: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "G": rank == 2,
        "F": rank == 4,
        "E": rank in (6, 7, 8),
    }
    if not ok.get(series, False):
        raise UnsupportedType(f"no simple root system of type {series}{rank}")


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan: np.ndarray
    positive_roots: tuple[tuple[int, ...], ...]
    positive_coroots: tuple[tuple[int, ...], ...]
    gram: np.ndarray = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def simple_roots(self) -> np.ndarray:
        """Simple roots as rows, in simple-root coordinates of t*."""
        return np.eye(self.rank, dtype=np.int64)

    def simple_reflection(self, i: int) -> np.ndarray:
        """Matrix of ``s_i`` (0-based ``i``) on t in simple-coroot coordinates."""
        m = np.eye(self.rank, dtype=np.int64)
        m[i, :] -= self.cartan[i, :]
        return m


def _closure(simple: list[np.ndarray], reflect) -> list[tuple[int, ...]]:
    """Positive part of the orbit of the simple vectors under the reflections."""
    seen = {tuple(int(a) for a in v) for v in simple}
    queue = deque(seen)
    while queue:
        v = np.array(queue.popleft(), dtype=np.int64)
        for i in range(len(simple)):
            u = tuple(int(a) for a in reflect(i, v))
            if u not in seen and all(a >= 0 for a in u):
                seen.add(u)
                queue.append(u)
    return sorted(seen, key=lambda v: (sum(v), tuple(-a for a in v)))


def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the root system of the given simple type.

    Positive roots are found by closing the simple roots under simple
    reflections, keeping nonnegative vectors.
    """
    series = series.upper()
    _check_type(series, rank)
    g = _gram(series, rank)
    # cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)
    cartan = np.array(
        [[2 * g[i, j] // g[j, j] for j in range(rank)] for i in range(rank)],
        dtype=np.int64,
    )
    e = [np.eye(rank, dtype=np.int64)[i] for i in range(rank)]

    def reflect_root(i, v):
        # s_i(lam) = lam - lam(alpha_i^vee) alpha_i
        out = v.copy()
        out[i] -= int(v @ cartan[:, i])
        return out

    def reflect_coroot(i, v):
        out = v.copy()
        out[i] -= int(cartan[i, :] @ v)
        return out

    roots = _closure(e, reflect_root)
    coroots = _closure(e, reflect_coroot)
    if len(roots) != len(coroots):
        raise AssertionError("root and coroot closures disagree")
    return RootSystem(series, rank, cartan, tuple(roots), tuple(coroots), g)


@dataclass(frozen=True, eq=False)
class WeylGroup:
    """All elements of W as integer matrices on t, in BFS (discovery) order.

    ``elements[k]`` is a read-only ``(rank, rank)`` array, ``lengths[k]`` its
    Coxeter length and ``index`` maps the flattened matrix back to ``k``.
    """

    root_system: RootSystem
    elements: tuple[np.ndarray, ...]
    lengths: tuple[int, ...]
    index: dict[tuple[int, ...], int] = field(repr=False)
    inverse: tuple[int, ...] = field(repr=False)
    words: tuple[tuple[int, ...], ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def key(self, m: np.ndarray) -> tuple[int, ...]:
        return tuple(int(a) for a in m.ravel())

    def find(self, m: np.ndarray) -> int:
        return self.index[self.key(m)]

    def mul(self, a: int, b: int) -> int:
        return self.find(self.elements[a] @ self.elements[b])

    def generator(self, i: int) -> int:
        """Index of the simple reflection ``s_i`` (0-based)."""
        return self.find(self.root_system.simple_reflection(i))

    @property
    def longest(self) -> int:
        return max(range(len(self)), key=lambda k: self.lengths[k])

    def identity(self) -> int:
        return 0


def inversion_count(rs: RootSystem, m: np.ndarray) -> int:
    """Number of positive coroots sent to negative coroots by ``m``."""
    pos = np.array(rs.positive_coroots, dtype=np.int64).T
    images = m @ pos
    return int(np.sum(np.all(images <= 0, axis=0)))


def enumerate_weyl(rs: RootSystem, cap: int = DEFAULT_GROUP_CAP) -> WeylGroup:
    """Breadth-first enumeration of W by left multiplication with simple reflections."""
    n = rs.rank
    gens = [rs.simple_reflection(i) for i in range(n)]
    ident = np.eye(n, dtype=np.int64)
    elements = [ident]
    words: list[tuple[int, ...]] = [()]
    lengths = [0]
    index = {tuple(int(a) for a in ident.ravel()): 0}
    head = 0
    while head < len(elements):
        w = elements[head]
        for i, s in enumerate(gens):
            u = s @ w
            k = tuple(int(a) for a in u.ravel())
            if k in index:
                continue
            if len(elements) >= cap:
                raise GroupTooLarge(f"|W({rs.name})| exceeds cap {cap}")
            index[k] = len(elements)
            elements.append(u)
            words.append((i,) + words[head])
            lengths.append(lengths[head] + 1)
        head += 1
    for m, ln in zip(elements, lengths):
        if inversion_count(rs, m) != ln:
            raise AssertionError("BFS length differs from inversion count")
        m.setflags(write=False)
    inverse = []
    for w in words:
        m = ident
        for i in w:  # inverse of s_{i1}...s_{ik} is s_{ik}...s_{i1}
            m = gens[i] @ m
        inverse.append(index[tuple(int(a) for a in m.ravel())])
    return WeylGroup(rs, tuple(elements), tuple(lengths), index, tuple(inverse), tuple(words))


def _generated_subgroup(W: WeylGroup, subset: list[int]) -> list[int]:
    gens = [W.generator(i) for i in subset]
    seen = [0]
    mark = {0}
    head = 0
    while head < len(seen):
        w = seen[head]
        for g in gens:
            u = W.mul(g, w)
            if u not in mark:
                mark.add(u)
                seen.append(u)
        head += 1
    return seen


def _primitive_integer_columns(vectors: list[list[Fraction]]) -> np.ndarray:
    cols = []
    for v in vectors:
        den = 1
        for a in v:
            den = den * a.denominator // gcd(den, a.denominator)
        ints = [int(a * den) for a in v]
        g = 0
        for a in ints:
            g = gcd(g, a)
        cols.append([a // g for a in ints])
    if not cols:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array(cols, dtype=np.int64).T


@dataclass(frozen=True)
class ParabolicData:
    """The Levi subsystem ``I`` with W_L, the center s and minimal coset reps.

    ``center_basis`` has shape ``(rank, dim s)``; its columns are primitive
    integer vectors (simple-coroot coordinates) spanning the common kernel of
    the simple roots in ``I``.  ``coset_reps`` are the minimal-length
    representatives of W/W_L, i.e. ``w`` with ``w(alpha_i) > 0`` for ``i`` in ``I``.
    """

    weyl: WeylGroup
    subset: tuple[int, ...]  # 1-based simple root indices
    elements_wl: tuple[int, ...]
    center_basis: np.ndarray
    coset_reps: tuple[int, ...]

    @property
    def dim_s(self) -> int:
        return self.center_basis.shape[1]


def parabolic_data(W: WeylGroup, subset) -> ParabolicData:
    rs = W.root_system
    subset = tuple(sorted(set(int(i) for i in subset)))
    if any(i < 1 or i > rs.rank for i in subset):
        raise ValueError(f"simple root indices must lie in 1..{rs.rank}: {subset}")
    zero_based = [i - 1 for i in subset]
    wl = _generated_subgroup(W, zero_based)

    if zero_based:
        # alpha_i(x) = sum_j cartan[i][j] x_j in coroot coordinates
        eqs = ExactMatrix.from_rows([[int(a) for a in rs.cartan[i, :]] for i in zero_based])
        center = _primitive_integer_columns([v.column(0) for v in kernel_basis(eqs)])
        if center.size == 0:
            center = np.zeros((rs.rank, 0), dtype=np.int64)
    else:
        center = np.eye(rs.rank, dtype=np.int64)

    reps = tuple(
        k for k, m in enumerate(W.elements)
        if all(np.all(m[:, i] >= 0) for i in zero_based)
    )
    center.setflags(write=False)
    return ParabolicData(W, subset, tuple(wl), center, reps)


@dataclass(frozen=True)
class ConjugacyClasses:
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    sizes: tuple[int, ...]
    class_of: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.classes)


def conjugacy_classes(W: WeylGroup) -> ConjugacyClasses:
    """Orbits of W acting on itself by conjugation, identity class first.

    Classes are listed in order of first appearance in the BFS enumeration and
    each representative is the first-discovered member.
    """
    gens = [W.generator(i) for i in range(W.root_system.rank)]
    class_of = [-1] * len(W)
    classes: list[tuple[int, ...]] = []
    for start in range(len(W)):
        if class_of[start] >= 0:
            continue
        cid = len(classes)
        class_of[start] = cid
        orbit = [start]
        head = 0
        while head < len(orbit):
            w = orbit[head]
            for g in gens:
                u = W.mul(W.mul(g, w), g)
                if class_of[u] < 0:
                    class_of[u] = cid
                    orbit.append(u)
            head += 1
        classes.append(tuple(sorted(orbit)))
    return ConjugacyClasses(
        tuple(classes),
        tuple(c[0] for c in classes),
        tuple(len(c) for c in classes),
        tuple(class_of),
    )


def partition_to_levi(n: int, mu) -> tuple[int, ...]:
    """Simple roots of ``A_{n-1}`` for the block-diagonal Levi ``gl(mu_1) x ... x gl(mu_k)``.

    >>> partition_to_levi(3, (2, 1))
    (1,)
    """
    mu = tuple(int(m) for m in mu)
    if n < 1 or any(m <= 0 for m in mu) or sum(mu) != n:
        raise InvalidPartition(f"{mu} is not a partition of {n}")
    cuts = set(itertools.accumulate(mu[:-1]))
    return tuple(i for i in range(1, n) if i not in cuts)


def levi_order(mu) -> int:
    """``|W_L| = prod mu_i!`` for the type A Levi of a composition."""
    from math import factorial
    return prod(factorial(m) for m in mu)


# -- optional JSON cache ------------------------------------------------------

CACHE_ENV = "SPRINGER_ZMODEL_CACHE"


def _cache_path(series: str, rank: int) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"weyl_{series}{rank}.json"


def save_weyl_cache(W: WeylGroup, cc: ConjugacyClasses, path: Path) -> None:
    """Write elements, reduced words, lengths and classes; integers as decimal strings."""
    rs = W.root_system
    payload = {
        "series": rs.series,
        "rank": rs.rank,
        "elements": [[str(int(a)) for a in m.ravel()] for m in W.elements],
        "words": [list(w) for w in W.words],
        "lengths": list(W.lengths),
        "classes": [list(c) for c in cc.classes],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload))


def weyl_from_cache(rs: RootSystem, data: dict) -> WeylGroup:
    n = rs.rank
    elements = [np.array([int(a) for a in m], dtype=np.int64).reshape(n, n) for m in data["elements"]]
    index = {tuple(int(a) for a in m.ravel()): k for k, m in enumerate(elements)}
    words = [tuple(w) for w in data["words"]]
    gens = [rs.simple_reflection(i) for i in range(n)]
    inverse = []
    for m, w, ln in zip(elements, words, data["lengths"]):
        prod_m = np.eye(n, dtype=np.int64)
        for i in w:
            prod_m = gens[i] @ prod_m
        if len(w) != ln or inversion_count(rs, m) != ln:
            raise RuntimeError("corrupt Weyl group cache")
        inverse.append(index[tuple(int(a) for a in prod_m.ravel())])
        m.setflags(write=False)
    return WeylGroup(rs, tuple(elements), tuple(data["lengths"]), index, tuple(inverse), tuple(words))


def load_weyl(series: str, rank: int, cap: int = DEFAULT_GROUP_CAP) -> WeylGroup:
    """Enumerate W, or read it from ``$SPRINGER_ZMODEL_CACHE/weyl_<type>.json`` when present."""
    rs = build_root_system(series, rank)
    path = _cache_path(rs.series, rank)
    if path is not None and path.exists():
        data = json.loads(path.read_text())
        if (data["series"], data["rank"]) == (rs.series, rank):
            return weyl_from_cache(rs, data)
    W = enumerate_weyl(rs, cap)
    if path is not None:
        save_weyl_cache(W, conjugacy_classes(W), path)
    return W
