"""Exact rational and modular linear algebra.

Small matrices are reduced by fraction-free (Bareiss) elimination in pure
Python.  Large integer matrices go through a certified modular route:

* the rank modulo a prime is a lower bound for the rank over Q, because a
  nonvanishing minor mod p is a nonvanishing integer minor;
* the rows dropped by the modular elimination are then written exactly as
  rational combinations of the kept rows (solve + exact integer product
  check), which bounds the rank from above.

Both bounds together give the rank over Q with no probabilistic step.  If a
prime is unlucky the exact check fails and the next prime is tried.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np
from flint import fmpz_mat, nmod_mat

__all__ = [
    "PRIME_POOL",
    "DenominatorDivisibleByPrime",
    "DimensionMismatch",
    "ExactMatrix",
    "ModularMatrix",
    "RowBasis",
    "bareiss_rank",
    "gauss_rank_colpivot",
    "rank_exact",
    "rank_modular",
    "kernel_basis",
    "column_space_contains",
    "certified_row_basis",
    "span_coefficients",
    "integer_rows",
]

# the five largest primes below 2^31
PRIME_POOL = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563)

# entries (rows * cols) up to which rank_exact runs pure-Python Bareiss
BAREISS_LIMIT = 20_000


class DenominatorDivisibleByPrime(ArithmeticError):
    pass


class DimensionMismatch(ValueError):
    pass


class ExactMatrix:
    """Immutable dense matrix of :class:`fractions.Fraction` entries, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, (e for r in rows for e in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "ExactMatrix":
        cols = [list(c) for c in columns]
        if rows is None:
            rows = len(cols[0]) if cols else 0
        return cls.from_rows([[c[i] for c in cols] for i in range(rows)], cols=len(cols))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list[Fraction]:
        return list(self.entries[j::self.cols]) if self.cols else []

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        out = [
            sum((a * b for a, b in zip(self.row(i), c)), Fraction(0))
            for i in range(self.rows) for c in cols
        ]
        return ExactMatrix(self.rows, other.cols, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.to_rows()!r})"

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def integer_rows(m) -> np.ndarray:
    """Scale each row by the lcm of its denominators; returns an integer array.

    Accepts an :class:`ExactMatrix`, an integer numpy array or nested lists
    of ints/Fractions.  Row scaling does not change rank, row-space
    membership questions or kernels.
    """
    if isinstance(m, np.ndarray) and m.dtype != object:
        if not np.issubdtype(m.dtype, np.integer):
            raise TypeError("floating point matrices are not accepted")
        return m
    rows = m.to_rows() if isinstance(m, ExactMatrix) else [list(r) for r in m]
    out = []
    for r in rows:
        fr = [Fraction(e) for e in r]
        den = 1
        for e in fr:
            den = _lcm(den, e.denominator)
        out.append([int(e * den) for e in fr])
    ncols = m.cols if isinstance(m, ExactMatrix) else (len(out[0]) if out else 0)
    arr = np.array(out, dtype=object).reshape(len(out), ncols)
    return _narrow(arr)


def _narrow(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object and arr.size and max(abs(int(a)) for a in arr.ravel()) < 2**62:
        return arr.astype(np.int64)
    if arr.dtype == object and not arr.size:
        return arr.astype(np.int64)
    return arr


def _shape(m) -> tuple[int, int]:
    if isinstance(m, ExactMatrix):
        return m.rows, m.cols
    a = np.asarray(m, dtype=object) if not isinstance(m, np.ndarray) else m
    if a.ndim != 2:
        a = a.reshape(len(a), -1) if len(a) else a.reshape(0, 0)
    return a.shape


# -- fraction-free elimination ------------------------------------------------


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by Bareiss fraction-free elimination (row pivoting).

    >>> bareiss_rank([[1, 2], [2, 4], [1, 0]])
    2
    """
    a = [[int(x) for x in r] for r in rows]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            if f == 0:
                # the Bareiss update still rescales the row by p / prev
                for j in range(c + 1, ncols):
                    ai[j] = ai[j] * p // prev
            else:
                ar = a[r]
                for j in range(c + 1, ncols):
                    ai[j] = (ai[j] * p - ar[j] * f) // prev
            ai[c] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def gauss_rank_colpivot(rows: Sequence[Sequence]) -> int:
    """Rank over Q by Gauss-Jordan on Fractions, eliminating column by column.

    Picks the pivot row for each column scanning from the bottom and then
    eliminates above and below; an elimination order independent of
    :func:`bareiss_rank`, used as a cross-check.
    """
    a = [[Fraction(x) for x in r] for r in rows]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    used = [False] * nrows
    rank = 0
    for c in reversed(range(ncols)):
        piv = next((i for i in reversed(range(nrows)) if not used[i] and a[i][c] != 0), None)
        if piv is None:
            continue
        used[piv] = True
        rank += 1
        pr = a[piv]
        inv = 1 / pr[c]
        for i in range(nrows):
            if i != piv and a[i][c] != 0:
                f = a[i][c] * inv
                ai = a[i]
                for j in range(ncols):
                    if pr[j]:
                        ai[j] -= f * pr[j]
    return rank


# -- modular arithmetic -------------------------------------------------------


@dataclass(frozen=True)
class ModularMatrix:
    """Matrix of residues modulo a word-size prime."""

    prime: int
    mat: nmod_mat

    @property
    def rows(self) -> int:
        return self.mat.nrows()

    @property
    def cols(self) -> int:
        return self.mat.ncols()

    def rank(self) -> int:
        return self.mat.rank()


def _pick_prime(prime: int | None, seed: int | None) -> int:
    if prime is not None:
        return int(prime)
    return random.Random(seed).choice(PRIME_POOL)


def to_modular(m, prime: int) -> ModularMatrix:
    """Reduce a rational matrix modulo ``prime``."""
    if isinstance(m, ExactMatrix):
        ents = []
        for e in m.entries:
            if e.denominator % prime == 0:
                raise DenominatorDivisibleByPrime(f"denominator of {e} divisible by {prime}")
            ents.append(e.numerator * pow(e.denominator, -1, prime) % prime)
        rows = [ents[i * m.cols:(i + 1) * m.cols] for i in range(m.rows)]
        return ModularMatrix(prime, _nmod(rows, m.rows, m.cols, prime))
    arr = integer_rows(m)
    return ModularMatrix(prime, _nmod_array(arr, prime))


def _nmod(rows, nrows: int, ncols: int, prime: int) -> nmod_mat:
    if nrows == 0 or ncols == 0:
        return nmod_mat(nrows, ncols, prime)
    return nmod_mat(rows, prime)


def _nmod_array(arr: np.ndarray, prime: int) -> nmod_mat:
    nrows, ncols = arr.shape
    if nrows == 0 or ncols == 0:
        return nmod_mat(nrows, ncols, prime)
    if arr.dtype == object:
        red = np.array([[int(x) % prime for x in r] for r in arr], dtype=np.int64)
    else:
        red = np.mod(arr, prime)
    return nmod_mat(red.tolist(), prime)


def _fmpz(arr: np.ndarray) -> fmpz_mat:
    nrows, ncols = arr.shape
    if nrows == 0 or ncols == 0:
        return fmpz_mat(nrows, ncols)
    return fmpz_mat(arr.tolist())


def rank_modular(m, prime: int | None = None, seed: int | None = 0) -> int:
    """Rank over the prime field; never exceeds :func:`rank_exact`.

    With ``prime=None`` a prime is drawn from :data:`PRIME_POOL` using ``seed``.
    """
    return to_modular(m, _pick_prime(prime, seed)).rank()


def _pivots(rref: nmod_mat, rank: int) -> list[int]:
    """Column of the leading entry of each of the first ``rank`` rows of an RREF.

    Leading columns increase down the rows, so each row is scanned from the
    previous pivot onward.
    """
    out = []
    j = 0
    for i in range(rank):
        while int(rref[i, j]) == 0:
            j += 1
        out.append(j)
        j += 1
    return out


# -- certified exact route ----------------------------------------------------


@dataclass(frozen=True)
class RowBasis:
    """Certified description of the row space of an integer matrix.

    ``rows`` are indices of linearly independent rows (greedy in input
    order) spanning the row space over Q; ``pivots`` are columns such that
    the square submatrix ``G[rows][:, pivots]`` is nonsingular.
    """

    rank: int
    rows: tuple[int, ...]
    pivots: tuple[int, ...]
    prime: int


def span_coefficients(basis: np.ndarray, pivots: Sequence[int], extras: np.ndarray):
    """Exact ``C`` with ``C @ basis == extras``, or ``None`` if no such ``C`` exists.

    ``basis[:, pivots]`` must be square and nonsingular.  Because the
    coefficients of a vector in the span are determined by its pivot
    entries, a failed product check proves non-membership over Q.
    Returns ``(numerators, denominator)`` as flint ``fmpz_mat``/``fmpz``.
    """
    r = basis.shape[0]
    m = extras.shape[0]
    if m == 0:
        return fmpz_mat(0, r), 1
    if r == 0:
        return (fmpz_mat(m, 0), 1) if not np.any(extras != 0) else None
    piv = list(pivots)
    a = _fmpz(np.ascontiguousarray(basis[:, piv])).transpose()
    rhs = _fmpz(np.ascontiguousarray(extras[:, piv])).transpose()
    sol = a.solve(rhs)  # (r x m) rationals, exact
    num, den = sol.numer_denom()
    coeffs = num.transpose()
    if coeffs * _fmpz(basis) != _fmpz(extras) * den:
        return None
    return coeffs, den


def certified_row_basis(g, primes: Sequence[int] = PRIME_POOL) -> RowBasis:
    """Greedy basis of the row space of ``g`` with an exact certificate.

    Lower bound: the chosen rows are independent modulo a prime.  Upper
    bound: every other row is an exact rational combination of them.
    """
    g = integer_rows(g)
    nrows, ncols = g.shape
    if nrows == 0 or ncols == 0 or not np.any(g != 0):
        return RowBasis(0, (), (), primes[0])
    for p in primes:
        try:
            gt, rank = _nmod_array(g, p).transpose().rref()
        except ZeroDivisionError:
            continue
        rows = _pivots(gt, rank)
        sub, _ = _nmod_array(g[rows], p).rref()
        pivots = _pivots(sub, rank)
        others = np.array([i for i in range(nrows) if i not in set(rows)], dtype=np.int64)
        if span_coefficients(g[rows], pivots, g[others]) is not None:
            return RowBasis(rank, tuple(rows), tuple(pivots), p)
    # every prime in the pool was unlucky; fall back to fraction-free LU in C
    rank = _fmpz(g).rank()
    rows = _greedy_rows_exact(g)
    return RowBasis(rank, tuple(rows), tuple(_greedy_rows_exact(g[rows].T)), 0)


def _greedy_rows_exact(g: np.ndarray) -> list[int]:
    rows: list[int] = []
    for i in range(g.shape[0]):
        if _fmpz(g[rows + [i]]).rank() == len(rows) + 1:
            rows.append(i)
    return rows


def rank_exact(m, method: str = "auto") -> int:
    """Rank over Q.

    ``method`` is ``"bareiss"`` (pure-Python fraction-free elimination),
    ``"certified"`` (modular rank with exact span certificate) or
    ``"auto"``, which uses Bareiss up to :data:`BAREISS_LIMIT` entries.
    """
    g = integer_rows(m)
    if g.size == 0:
        return 0
    if method == "bareiss" or (method == "auto" and g.size <= BAREISS_LIMIT):
        return bareiss_rank(g.tolist())
    if method in ("auto", "certified"):
        return certified_row_basis(g).rank
    raise ValueError(f"unknown method {method!r}")


def kernel_basis(m) -> list[ExactMatrix]:
    """Basis of the right null space over Q, as column matrices.

    The vectors are normalized so that the free coordinate is 1 and the
    other free coordinates are 0.
    """
    rows, cols = _shape(m)
    if cols == 0:
        return []
    if rows == 0:
        return [ExactMatrix.from_columns([[int(i == j) for i in range(cols)]]) for j in range(cols)]
    g = integer_rows(m)
    if g.size <= BAREISS_LIMIT:
        return _kernel_small(g)
    rb = certified_row_basis(g)
    basis = g[list(rb.rows)]
    pivots = list(rb.pivots)
    free = [j for j in range(cols) if j not in set(pivots)]
    if not free:
        return []
    # solve basis[:, pivots] v_p = -basis[:, f]
    a = _fmpz(np.ascontiguousarray(basis[:, pivots]))
    rhs = -_fmpz(np.ascontiguousarray(basis[:, free]))
    sol = a.solve(rhs)
    out = []
    for k, f in enumerate(free):
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, pcol in enumerate(pivots):
            q = sol[i, k]
            v[pcol] = Fraction(int(q.p), int(q.q))
        out.append(ExactMatrix.from_columns([v]))
    return out


def _kernel_small(g: np.ndarray) -> list[ExactMatrix]:
    a = [[Fraction(int(x)) for x in r] for r in g]
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = []
    for f in (j for j in range(ncols) if j not in set(pivots)):
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pcol in enumerate(pivots):
            v[pcol] = -a[i][f]
        out.append(ExactMatrix.from_columns([v]))
    return out


def _hstack(a, b) -> np.ndarray:
    ra, rb = _shape(a)[0], _shape(b)[0]
    if ra != rb:
        raise DimensionMismatch(f"row counts differ: {ra} vs {rb}")
    ia = integer_columns(a)
    ib = integer_columns(b)
    out = np.concatenate([ia.astype(object), ib.astype(object)], axis=1)
    return _narrow(out)


def integer_columns(m) -> np.ndarray:
    """Integer matrix with each column scaled by the lcm of its denominators."""
    if isinstance(m, np.ndarray) and m.dtype != object:
        return m
    if not isinstance(m, ExactMatrix):
        m = ExactMatrix.from_rows([list(r) for r in m])
    if m.cols == 0 or m.rows == 0:
        return np.zeros((m.rows, m.cols), dtype=np.int64)
    return integer_rows([m.column(j) for j in range(m.cols)]).T


def column_space_contains(a, b) -> bool:
    """True iff every column of ``b`` lies in the column span of ``a``."""
    return rank_exact(_hstack(a, b)) == rank_exact(integer_columns(a))
