"""The acceptance matrix run by ``springer-zmodel verify`` and the test suite.

Every check is exact: integer Betti numbers, numerators, dimensions and
rational character values.  The modular oracle is compared against the
certified exact ranks and any disagreement is a failure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable

from springer_zmodel.characters import (
    character_of_H,
    inner_product,
    reflection_character,
    trivial_character,
)
from springer_zmodel.cohomology import betti_table, freeness_certificate, surjectivity_diagnostic
from springer_zmodel.oracle import length_generating_function, random_point_rank
from springer_zmodel.roots import partition_to_levi
from springer_zmodel.zmodel import (
    ZModel,
    build_zmodel,
    generic_fiber_distinct,
    hilbert_dim,
    restriction_factors,
    weyl_group,
)

ORACLE_SEEDS = (0, 1, 2)

# true Betti numbers of the C3 Springer fiber for Jordan type (3,3):
# H^0 trivial, H^2 = reflection (3) + a line, H^4 irreducible of dimension 3
C3_TRUE_BETTI = (1, 4, 3)
C3_LEVI = ("C", 3, (1, 2))

COINVARIANT_CASES = (("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3))

# (n, partition, expected Betti table or None, expected total)
TYPE_A_CASES = (
    (3, (2, 1), (1, 2), 3),
    (3, (1, 1, 1), (1, 2, 2, 1), 6),
    (4, (2, 2), None, 6),
    (4, (2, 1, 1), None, 12),
    (4, (3, 1), None, 4),
)

RESTRICTION_CASES = (("A", 2, (1,), 3), ("C", 3, (1, 2), 4))


@dataclass(frozen=True)
class Check:
    criterion: int
    case: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"{flag}  [{self.criterion}] {self.case:<14} {self.detail}  ({self.seconds:.1f}s)"


@lru_cache(maxsize=None)
def model(series: str, rank: int, subset: tuple[int, ...]) -> ZModel:
    return build_zmodel(weyl_group(series, rank), subset)


def type_a_model(n: int, mu) -> ZModel:
    return model("A", n - 1, partition_to_levi(n, mu))


def _timed(criterion: int, case: str, fn: Callable[[], tuple[bool, str]]) -> Check:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported not raised
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(criterion, case, ok, detail, time.perf_counter() - t0)


# -- individual criteria ------------------------------------------------------


def check_c3_diagnostic() -> Check:
    def run():
        zm = model(*C3_LEVI)
        bt = betti_table(zm)
        cert = freeness_certificate(zm)
        diag = surjectivity_diagnostic(zm, C3_TRUE_BETTI)
        ok = (
            bt.total == 8
            and zm.components == 8
            and cert.passed
            and cert.numerator_at_one() == 8
            and bt.betti[1] == 3 < C3_TRUE_BETTI[1]
            and diag.first_unequal == 1
            and diag.summary().startswith("unequal at degree 1")
        )
        return ok, f"betti={list(bt.betti)} P(1)={cert.numerator_at_one()} {diag.summary()}"

    chk = _timed(1, "C3[1,2]", run)
    if chk.seconds >= 60:
        return Check(1, chk.case, False, chk.detail + " runtime >= 60s", chk.seconds)
    return chk


def check_coinvariant(series: str, rank: int) -> Check:
    def run():
        zm = model(series, rank, ())
        cert = freeness_certificate(zm)
        lgf = tuple(length_generating_function(zm.weyl))
        return cert.numerator == lgf and cert.passed, f"P={list(cert.numerator)} lengths={list(lgf)}"

    return _timed(2, f"{series}{rank}[]", run)


def _numerator_from_dims(dims, k: int) -> list[int]:
    """Multiply a Hilbert function by ``(1 - t)^k`` (truncated to ``len(dims)``)."""
    out = list(dims)
    for _ in range(k):
        out = [out[0]] + [out[i] - out[i - 1] for i in range(1, len(out))]
    return out


def check_type_a(n: int, mu, expected, total) -> Check:
    def run():
        zm = type_a_model(n, mu)
        bt = betti_table(zm)
        index = factorial(n) // prod(factorial(m) for m in mu)
        ok = bt.total == total == index and bt.betti[0] == 1 and zm.components == index
        if expected is not None:
            ok = ok and bt.betti == tuple(expected)
        # the oracle's Hilbert function must reproduce the same table
        top = bt.top_degree + 2
        for seed in ORACLE_SEEDS:
            odims = [random_point_rank(zm, d, seed=seed) for d in range(top + 1)]
            num = _numerator_from_dims(odims, zm.dim_s)
            ok = ok and num[: len(bt.betti)] == list(bt.betti) and not any(num[len(bt.betti):])
        return ok, f"betti={list(bt.betti)} total={bt.total} index={index}"

    return _timed(3, f"sl{n}{''.join(map(str, mu))}", run)


def check_characters(zm: ZModel, case: str) -> Check:
    def run():
        bt = betti_table(zm)
        W = zm.weyl
        triv = trivial_character(W)
        refl = reflection_character(W)
        notes = []
        ok = True
        for d, b in enumerate(bt.betti):
            chi = character_of_H(zm, d, check_members=True, seed=d)
            norm = inner_product(chi, chi)
            ok = ok and chi.degree == b and norm.denominator == 1 and norm >= 1
            if d == 0:
                ok = ok and chi.values == triv.values
        if case == "C3[1,2]":
            chi1 = character_of_H(zm, 1)
            norm = inner_product(chi1, chi1)
            ok = ok and chi1.values == refl.values and norm == 1
            notes.append(f"deg1=refl <chi,chi>={norm}")
        return ok, f"degrees 0..{bt.top_degree} class functions, dims match betti " + " ".join(notes)

    return _timed(4, case, run)


def check_oracle(zm: ZModel, case: str) -> Check:
    def run():
        bt = betti_table(zm)
        bad = []
        for d in range(bt.top_degree + 3):
            exact = hilbert_dim(zm, d)
            for seed in ORACLE_SEEDS:
                r = random_point_rank(zm, d, seed=seed)
                if r != exact:
                    bad.append((d, seed, exact, r))
        return not bad, (f"degrees 0..{bt.top_degree + 2} x seeds {list(ORACLE_SEEDS)} agree"
                         if not bad else f"disagreements (d, seed, exact, oracle): {bad}")

    return _timed(5, case, run)


def check_restriction(series: str, rank: int, subset, max_d: int) -> Check:
    def run():
        big = model(series, rank, ())
        small = model(series, rank, tuple(subset))
        res = [restriction_factors(big, small, d) for d in range(max_d + 1)]
        return all(res), f"d=0..{max_d}: {res}"

    return _timed(6, f"{series}{rank}[{','.join(map(str, subset))}]", run)


def check_fibers(zm: ZModel, case: str) -> Check:
    def run():
        ok = generic_fiber_distinct(zm, trials=20, seed=0)
        return ok, f"20 random fibers with {zm.components} distinct points"

    return _timed(6, case, run)


# -- suites --------------------------------------------------------------------


def _all_cases() -> list[tuple[str, Callable[[], ZModel]]]:
    cases = [("C3[1,2]", lambda: model(*C3_LEVI))]
    cases += [(f"{s}{r}[]", (lambda s=s, r=r: model(s, r, ()))) for s, r in COINVARIANT_CASES]
    cases += [
        (f"sl{n}{''.join(map(str, mu))}", (lambda n=n, mu=mu: type_a_model(n, mu)))
        for n, mu, _, _ in TYPE_A_CASES
    ]
    return cases


def suite_tasks(name: str) -> list[Callable[[], Check]]:
    """Zero-argument callables, one per line of the PASS/FAIL table."""
    tasks: list[Callable[[], Check]] = []
    quick_coinv = (("A", 1), ("A", 2), ("B", 2))
    if name in ("c3", "quick", "full"):
        tasks.append(check_c3_diagnostic)
    if name in ("coinvariant", "full"):
        tasks += [(lambda s=s, r=r: check_coinvariant(s, r)) for s, r in COINVARIANT_CASES]
    if name == "quick":
        tasks += [(lambda s=s, r=r: check_coinvariant(s, r)) for s, r in quick_coinv]
    if name in ("typea", "quick", "full"):
        tasks += [(lambda c=c: check_type_a(*c)) for c in TYPE_A_CASES]

    cases = _all_cases()
    if name == "c3":
        cases = cases[:1]
    elif name == "quick":
        keep = {"C3[1,2]", "A1[]", "A2[]", "B2[]", "sl321", "sl3111", "sl422", "sl431"}
        cases = [c for c in cases if c[0] in keep]
    elif name in ("coinvariant", "typea"):
        cases = []
    for label, make in cases:
        tasks.append(lambda make=make, label=label: check_characters(make(), label))
        tasks.append(lambda make=make, label=label: check_oracle(make(), label))
    if name in ("c3", "full"):
        tasks += [(lambda c=c: check_restriction(*c)) for c in RESTRICTION_CASES if c[0] == "C" or name == "full"]
    if name == "quick":
        tasks.append(lambda: check_restriction(*RESTRICTION_CASES[0]))
    for label, make in cases:
        tasks.append(lambda make=make, label=label: check_fibers(make(), label))
    return tasks


SUITES = ("quick", "c3", "coinvariant", "typea", "full")


def run_suite(name: str) -> list[Check]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    return [task() for task in suite_tasks(name)]
