"""The graded quotient H = C (x)_{S(s*)} C[Z_l] and the freeness certificate.

Inside the component model ``R = (+)_c C[s]``, write ``V_d`` for the image of
``C[Z_l]_d`` and ``U_d = sum_j s_j V_{d-1}``.  The first-factor coordinates
restrict to the same ``B s`` on every component, so ``S(s*)`` acts by
multiplying every block by the same polynomial, and
``V_d = U_d + Y_d`` with ``Y_d`` the image of the degree-``d`` polynomials
in ``y`` alone.  Then ``H_d = V_d / U_d``.

Bases are kept in "free form": each row of the basis of ``V_d`` is
``s^a h`` for a lift ``h`` of a basis vector of some ``H_e``.  When the ring
is free over ``S(s*)`` these rows stay independent, which the modular rank
certifies; rows of ``Y_d`` not chosen as new lifts are certified to lie in the
span by an exact solve (see :mod:`springer_zmodel.exact_linalg`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from weakref import WeakKeyDictionary

import numpy as np

from springer_zmodel import monomials as mono
from springer_zmodel.exact_linalg import (
    PRIME_POOL,
    _nmod_array,
    _pivots,
    certified_row_basis,
    span_coefficients,
)
from springer_zmodel.zmodel import ZModel, y_block

__all__ = [
    "InconclusiveDepth",
    "UnluckyPrimes",
    "GradedPiece",
    "GradedRing",
    "BettiTable",
    "FreenessCertificate",
    "DiagnosticReport",
    "graded_ring",
    "betti_table",
    "freeness_certificate",
    "surjectivity_diagnostic",
    "free_module_dims",
]


class InconclusiveDepth(RuntimeError):
    pass


class UnluckyPrimes(RuntimeError):
    pass


@dataclass(frozen=True)
class GradedPiece:
    """Certified bases in degree ``d``.

    ``basis`` rows are the U-basis followed by the ``betti`` new lifts; the
    square block ``basis[:, pivots]`` is nonsingular.  ``lift_monomials`` are
    the y-monomials (grlex index tuples) chosen as lifts of a basis of H_d.
    """

    d: int
    basis: np.ndarray = field(repr=False)
    pivots: tuple[int, ...] = field(repr=False)
    tags: tuple[int, ...] = field(repr=False)
    dim_u: int
    betti: int
    lift_monomials: tuple[tuple[int, ...], ...]
    free_form: bool
    prime: int

    @property
    def dim_v(self) -> int:
        return self.dim_u + self.betti

    @property
    def lifts(self) -> np.ndarray:
        return self.basis[self.dim_u:]


def _multiply_block_rows(rows: np.ndarray, tags, n_comp: int, k: int, d: int):
    """All ``s_j * row`` with ``j >= tag(row)``, rows living in degree ``d``."""
    kd, kd1 = mono.count(k, d), mono.count(k, d + 1)
    table = mono.shift_table(k, d)
    out_rows, out_tags = [], []
    for j in range(k):
        sel = [i for i, t in enumerate(tags) if t <= j]
        if not sel:
            continue
        block = np.zeros((len(sel), n_comp * kd1), dtype=rows.dtype)
        src = rows[sel]
        for c in range(n_comp):
            block[:, c * kd1 + table[:, j]] = src[:, c * kd:(c + 1) * kd]
        out_rows.append(block)
        out_tags.extend([j] * len(sel))
    if not out_rows:
        return np.zeros((0, n_comp * kd1), dtype=np.int64), []
    return np.vstack(out_rows), out_tags


def _common_dtype(*arrays: np.ndarray):
    return object if any(a.dtype == object for a in arrays) else np.int64


def _fits_int64(a: np.ndarray) -> bool:
    if a.dtype != object or a.size == 0:
        return True
    return max(abs(int(v)) for v in a.ravel()) < 2**62


class GradedRing:
    """Degree-by-degree certified computation of ``V_d``, ``U_d`` and ``H_d``."""

    def __init__(self, zm: ZModel, primes=PRIME_POOL, probabilistic: bool = False):
        self.zm = zm
        self.primes = tuple(primes)
        # skip the exact span certificates; ranks are then modular lower bounds
        self.probabilistic = probabilistic
        self._pieces: list[GradedPiece] = []

    def piece(self, d: int) -> GradedPiece:
        while len(self._pieces) <= d:
            self._pieces.append(self._next_piece(len(self._pieces)))
        return self._pieces[d]

    def _next_piece(self, d: int) -> GradedPiece:
        zm = self.zm
        n_comp, k = zm.components, zm.dim_s
        ncols = n_comp * mono.count(k, d)
        if d == 0:
            gens = np.zeros((0, ncols), dtype=np.int64)
            tags: list[int] = []
            free_form = True
        else:
            prev = self._pieces[d - 1]
            gens, tags = _multiply_block_rows(prev.basis, prev.tags, n_comp, k, d - 1)
            free_form = prev.free_form
        ys = y_block(zm, d) if ncols else np.zeros((mono.count(zm.rank, d), 0), dtype=np.int64)
        dtype = _common_dtype(gens, ys)
        gens, ys = gens.astype(dtype), ys.astype(dtype)
        last_error = None
        for p in self.primes:
            try:
                return self._certify(d, gens, tags, ys, free_form, p)
            except _Unlucky as exc:
                last_error = exc
        raise UnluckyPrimes(f"degree {d}: no prime in the pool certified the bases ({last_error})")

    def _certify(self, d, gens, tags, ys, free_form, p) -> GradedPiece:
        k = self.zm.dim_s
        ncols = gens.shape[1]
        if ncols == 0:
            return GradedPiece(d, gens, (), (), 0, 0, (), free_form, p)

        # U_d: fast path when the free-form generators are independent mod p
        if gens.shape[0]:
            ru, rank_u = _nmod_array(gens, p).rref()
            if rank_u == gens.shape[0]:
                ubasis, utags = gens, list(tags)
                upiv = _pivots(ru, rank_u)
            else:
                if self.probabilistic:
                    rows = _pivots(_nmod_array(gens, p).transpose().rref()[0], rank_u)
                else:
                    rows = certified_row_basis(gens, primes=(p,) + tuple(q for q in self.primes if q != p)).rows
                ubasis = gens[list(rows)]
                utags = [0] * len(rows)
                free_form = False
                ru, rank_u = _nmod_array(ubasis, p).rref()
                upiv = _pivots(ru, rank_u)
        else:
            ubasis, utags, rank_u, upiv, ru = gens, [], 0, [], None

        # reduce the y-monomial rows modulo U_d (mod p), then pick new lifts greedily
        ymod = _nmod_array(ys, p)
        if rank_u:
            ycols = _nmod_array(np.ascontiguousarray(ys[:, upiv]), p)
            res = ymod - ycols * ru
        else:
            res = ymod
        rt, nb = res.transpose().rref()
        picks = _pivots(rt, nb)
        rp, nb2 = _nmod_array_from_rows(res, picks, p).rref()
        if nb2 != nb:
            raise _Unlucky("inconsistent residual rank")
        ppiv = _pivots(rp, nb)

        basis = np.vstack([ubasis, ys[picks]]) if picks else ubasis
        pivots = list(upiv) + list(ppiv)
        others = [i for i in range(ys.shape[0]) if i not in set(picks)]
        if others and not self.probabilistic and span_coefficients(basis, pivots, ys[others]) is None:
            raise _Unlucky(f"y-monomials not certified in span mod {p}")

        lift_monos = tuple(mono.monomials(self.zm.rank, d)[i] for i in picks)
        if basis.dtype == object and _fits_int64(basis):
            basis = basis.astype(np.int64)
        basis.setflags(write=False)
        return GradedPiece(
            d, basis, tuple(pivots), tuple(utags) + (0,) * len(picks),
            rank_u, len(picks), lift_monos, free_form, p,
        )

    def coordinates(self, d: int, vectors: np.ndarray):
        """Exact coordinates of ``vectors`` (rows in degree ``d``) in ``piece(d).basis``.

        Returns a list of rows of Fractions; raises ``ValueError`` if some
        vector is not in ``V_d``.
        """
        pc = self.piece(d)
        res = span_coefficients(pc.basis, pc.pivots, vectors.astype(pc.basis.dtype))
        if res is None:
            raise ValueError("vector outside the degree piece")
        num, den = res
        den = int(den)
        return [[Fraction(int(num[i, j]), den) for j in range(num.ncols())] for i in range(num.nrows())]


class _Unlucky(Exception):
    pass


def _nmod_array_from_rows(mat, rows, p: int):
    ncols = mat.ncols()
    ents = mat.entries()
    arr = np.array([[int(ents[i * ncols + j]) for j in range(ncols)] for i in rows], dtype=np.int64)
    return _nmod_array(arr.reshape(len(rows), ncols), p)


_RINGS: "WeakKeyDictionary[ZModel, dict[bool, GradedRing]]" = WeakKeyDictionary()


def graded_ring(zm: ZModel, probabilistic: bool = False) -> GradedRing:
    """The (cached) graded computation attached to ``zm``."""
    rings = _RINGS.setdefault(zm, {})
    if probabilistic not in rings:
        rings[probabilistic] = GradedRing(zm, probabilistic=probabilistic)
    return rings[probabilistic]


# -- Betti tables and freeness ------------------------------------------------


@dataclass(frozen=True)
class BettiTable:
    """``betti[d] = dim H_d`` (model for ``dim H^{2d}``), ``top_degree`` its last nonzero slot."""

    betti: tuple[int, ...]
    dims: tuple[int, ...]
    top_degree: int

    @property
    def total(self) -> int:
        return sum(self.betti)

    @property
    def cohomological_degrees(self) -> tuple[int, ...]:
        return tuple(2 * d for d in range(len(self.betti)))


def betti_table(zm: ZModel, probabilistic: bool = False) -> BettiTable:
    """Graded dimensions of H, stopping at the first vanishing positive degree.

    H is generated in degree 1, so ``H_d = 0`` forces ``H_e = 0`` for all
    ``e > d``; one extra degree is checked anyway.
    """
    ring = graded_ring(zm, probabilistic)
    betti, dims = [], []
    d = 0
    while True:
        pc = ring.piece(d)
        if d >= 1 and pc.betti == 0:
            if ring.piece(d + 1).betti != 0:
                raise AssertionError(f"H_{d} = 0 but H_{d + 1} != 0; degree-1 generation violated")
            break
        betti.append(pc.betti)
        dims.append(pc.dim_v)
        d += 1
    return BettiTable(tuple(betti), tuple(dims), len(betti) - 1)


def free_module_dims(numerator, dim_s: int, upto: int) -> list[int]:
    """Coefficients of ``P(t) / (1 - t)^dim_s`` in degrees ``0..upto``."""
    out = []
    for d in range(upto + 1):
        total = 0
        for e, pe in enumerate(numerator):
            if e > d:
                break
            if dim_s == 0:
                total += pe if e == d else 0
            else:
                total += pe * comb(dim_s + d - e - 1, d - e)
        out.append(total)
    return out


@dataclass(frozen=True)
class FreenessCertificate:
    numerator: tuple[int, ...]
    checked_degrees: int
    dims: tuple[int, ...]
    expected: tuple[int, ...]
    components: int
    passed: bool

    def numerator_at_one(self) -> int:
        return sum(self.numerator)


def freeness_certificate(
    zm: ZModel, depth: int | None = None, probabilistic: bool = False
) -> FreenessCertificate:
    """Compare the Hilbert function of C[Z_l] with ``P(t)/(1-t)^dim s``.

    ``P(t) = sum betti[d] t^d``.  Passing means ``P(1) = #components`` and the
    two agree in every degree ``<= depth``; ``depth`` defaults to
    ``top_degree + dim s`` and smaller values raise :class:`InconclusiveDepth`.
    """
    bt = betti_table(zm, probabilistic)
    need = bt.top_degree + zm.dim_s
    if depth is None:
        depth = need
    if depth < need:
        raise InconclusiveDepth(f"depth {depth} < top degree + dim s = {need}")
    ring = graded_ring(zm, probabilistic)
    dims = tuple(ring.piece(d).dim_v for d in range(depth + 1))
    expected = tuple(free_module_dims(bt.betti, zm.dim_s, depth))
    passed = sum(bt.betti) == zm.components and dims == expected
    return FreenessCertificate(bt.betti, depth, dims, expected, zm.components, passed)


@dataclass(frozen=True)
class DiagnosticReport:
    model: tuple[int, ...]
    claimed: tuple[int, ...]
    per_degree: tuple[bool, ...]

    @property
    def equal(self) -> bool:
        return all(self.per_degree)

    @property
    def first_unequal(self) -> int | None:
        return next((d for d, ok in enumerate(self.per_degree) if not ok), None)

    def summary(self) -> str:
        if self.equal:
            return "equal"
        d = self.first_unequal
        return f"unequal at degree {d} (model {self._at(self.model, d)} vs claimed {self._at(self.claimed, d)})"

    @staticmethod
    def _at(seq, d):
        return seq[d] if d < len(seq) else 0


def surjectivity_diagnostic(zm: ZModel, claimed_true_betti) -> DiagnosticReport:
    """Degreewise comparison of the model with Betti numbers of the actual Springer fiber.

    The model always computes the image of H*(X) in H*(X_sigma), so any
    mismatch shows the restriction map is not surjective for this Levi.
    """
    model = betti_table(zm).betti
    claimed = tuple(int(b) for b in claimed_true_betti)
    length = max(len(model), len(claimed))
    pad = lambda seq: tuple(seq) + (0,) * (length - len(seq))  # noqa: E731
    m, c = pad(model), pad(claimed)
    return DiagnosticReport(model, claimed, tuple(a == b for a, b in zip(m, c)))
