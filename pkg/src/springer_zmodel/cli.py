"""Command line front end.

Simple roots follow Bourbaki numbering (1-based).  In type C_n the last root
alpha_n is long, so ``--type C --rank 3 --levi 1,2`` is the Levi gl(3) inside
sp(6), whose principal nilpotent has Jordan type (3,3).

Exit codes: 0 success, 1 failed verification, 2 freeness certificate failed,
3 oracle disagreement, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from springer_zmodel.characters import (
    character_of_H,
    classes_of,
    inner_product,
    reflection_character,
    trivial_character,
)
from springer_zmodel.cohomology import InconclusiveDepth, betti_table, freeness_certificate, graded_ring
from springer_zmodel.oracle import random_point_rank
from springer_zmodel.roots import (
    GroupTooLarge,
    InvalidPartition,
    UnsupportedType,
    partition_to_levi,
)
from springer_zmodel.verify import SUITES, suite_tasks
from springer_zmodel.zmodel import build_zmodel, weyl_group

EXIT_OK, EXIT_FAIL, EXIT_CERT, EXIT_ORACLE, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _model_from_args(args):
    series = args.type.upper()
    if args.partition is not None:
        if series != "A":
            raise UsageError("--partition is only meaningful for type A")
        subset = partition_to_levi(args.rank + 1, _int_list(args.partition))
    else:
        subset = _int_list(args.levi)
    W = weyl_group(series, args.rank)
    if any(i < 1 or i > args.rank for i in subset):
        raise UsageError(f"Levi indices must lie in 1..{args.rank}")
    return build_zmodel(W, subset), subset


def _poly(coeffs) -> str:
    terms = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mon = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        coef = str(c) if (c != 1 or e == 0) else ""
        terms.append(f"{coef}{mon}")
    return " + ".join(terms) or "0"


def _s(x) -> str:
    return str(x)


def _emit(fmt: str, payload: dict, table_lines: list[str], csv_rows: list[list]) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        return buf.getvalue()
    return "\n".join(table_lines) + "\n"


def cmd_hilbert(args) -> int:
    zm, subset = _model_from_args(args)
    prob = args.probabilistic
    bt = betti_table(zm, probabilistic=prob)
    try:
        cert = freeness_certificate(zm, depth=args.max_degree, probabilistic=prob)
    except InconclusiveDepth as exc:
        raise UsageError(str(exc)) from None
    depth = cert.checked_degrees
    ring = graded_ring(zm, prob)

    seeds = list(args.oracle_seeds)
    disagreements = []
    for d in range(bt.top_degree + 3):
        for seed in seeds:
            r = random_point_rank(zm, d, seed=seed)
            if r != ring.piece(d).dim_v:
                disagreements.append({"degree": _s(d), "seed": _s(seed),
                                      "exact": _s(ring.piece(d).dim_v), "oracle": _s(r)})

    payload = {
        "input": {"type": zm.root_system.series, "rank": _s(zm.rank), "levi": [_s(i) for i in subset],
                  "components": _s(zm.components), "dim_s": _s(zm.dim_s),
                  "exact": not prob},
        "dims": [_s(x) for x in cert.dims],
        "betti": [{"degree": _s(d), "cohomological_degree": _s(2 * d), "dim": _s(b)}
                  for d, b in enumerate(bt.betti)],
        "numerator": [_s(c) for c in cert.numerator],
        "certificate": {"passed": cert.passed, "checked_degrees": _s(depth),
                        "P(1)": _s(cert.numerator_at_one()), "components": _s(zm.components)},
        "seeds": [_s(s) for s in seeds],
        "oracle_disagreements": disagreements,
    }
    lines = [
        f"model (image of H*(X)) for {zm.label}: {zm.components} components, dim s = {zm.dim_s}",
        f"dims C[Z]_d, d=0..{depth}: {list(cert.dims)}",
        "  d  2d  betti",
    ] + [f"{d:>3} {2 * d:>3}  {b}" for d, b in enumerate(bt.betti)] + [
        f"P(t) = {_poly(cert.numerator)}   P(1) = {cert.numerator_at_one()}",
        f"freeness certificate: {'passed' if cert.passed else 'FAILED'} (checked degrees 0..{depth})",
        f"oracle seeds {seeds}: {'agree' if not disagreements else 'DISAGREE ' + str(disagreements)}",
    ]
    rows = [["degree", "cohomological_degree", "dim_ring", "betti"]]
    rows += [[d, 2 * d, cert.dims[d] if d < len(cert.dims) else "", bt.betti[d] if d < len(bt.betti) else 0]
             for d in range(max(len(cert.dims), len(bt.betti)))]
    sys.stdout.write(_emit(args.format, payload, lines, rows))
    if disagreements:
        return EXIT_ORACLE
    return EXIT_OK if cert.passed else EXIT_CERT


def cmd_character(args) -> int:
    zm, subset = _model_from_args(args)
    W = zm.weyl
    cc = classes_of(W)
    chi = character_of_H(zm, args.degree)
    triv, refl = trivial_character(W), reflection_character(W)
    norm = inner_product(chi, chi)
    m_triv, m_refl = inner_product(chi, triv), inner_product(chi, refl)
    payload = {
        "input": {"type": zm.root_system.series, "rank": _s(zm.rank), "levi": [_s(i) for i in subset],
                  "degree": _s(args.degree), "cohomological_degree": _s(2 * args.degree)},
        "characters": {
            "classes": [{"representative_length": _s(W.lengths[r]), "size": _s(n), "value": _s(v)}
                        for r, n, v in zip(cc.representatives, cc.sizes, chi.values)],
            "dimension": _s(chi.degree),
            "norm": _s(norm),
            "trivial_multiplicity": _s(m_triv),
            "reflection_multiplicity": _s(m_refl),
        },
    }
    lines = [f"character of H_{args.degree} (H^{2 * args.degree}) for {zm.label}",
             " class  len(rep)  size  value  reflection"]
    lines += [f"{k:>6} {W.lengths[r]:>8} {n:>5} {str(v):>6} {str(rv):>10}"
              for k, (r, n, v, rv) in enumerate(zip(cc.representatives, cc.sizes, chi.values, refl.values))]
    lines += [f"dimension {chi.degree}, <chi,chi> = {norm}, "
              f"trivial multiplicity {m_triv}, reflection multiplicity {m_refl}"]
    rows = [["class", "representative_length", "size", "value"]]
    rows += [[k, W.lengths[r], n, v] for k, (r, n, v) in enumerate(zip(cc.representatives, cc.sizes, chi.values))]
    sys.stdout.write(_emit(args.format, payload, lines, rows))
    return EXIT_OK


def _run_task(suite: str, index: int):
    return suite_tasks(suite)[index]()


def cmd_verify(args) -> int:
    n = len(suite_tasks(args.suite))
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            checks = list(pool.map(_run_task, [args.suite] * n, range(n)))
    else:
        tasks = suite_tasks(args.suite)
        checks = []
        for task in tasks:
            chk = task()
            print(chk.line(), flush=True)
            checks.append(chk)
    if args.jobs > 1:
        for chk in checks:
            print(chk.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed in suite {args.suite!r}")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="springer-zmodel", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def model_args(q):
        q.add_argument("--type", required=True, help="series A, B, C, D, E, F or G")
        q.add_argument("--rank", required=True, type=int)
        g = q.add_mutually_exclusive_group()
        g.add_argument("--levi", default="",
                       help='comma-separated Bourbaki simple-root indices of the Levi, "" for the Borel')
        g.add_argument("--partition", help="type A only: partition of rank+1, e.g. 2,1")
        q.add_argument("--format", choices=("table", "json", "csv"), default="table")

    h = sub.add_parser("hilbert", help="graded dimensions, Betti table and freeness certificate")
    model_args(h)
    h.add_argument("--max-degree", type=int, default=None,
                   help="check the Hilbert function up to this degree (default top + dim s)")
    h.add_argument("--oracle-seeds", type=_seed_list, default=(0,),
                   help="comma-separated seeds for the random-point oracle (default 0)")
    h.add_argument("--probabilistic", action="store_true",
                   help="accept modular ranks without the exact span certificate")
    h.set_defaults(func=cmd_hilbert)

    c = sub.add_parser("character", help="W-character of one graded piece of the model")
    model_args(c)
    c.add_argument("--degree", type=int, required=True)
    c.set_defaults(func=cmd_character)

    v = sub.add_parser("verify", help="run an acceptance suite and print PASS/FAIL per check")
    v.add_argument("--suite", choices=SUITES, default="quick")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)
    return p


def _seed_list(text: str) -> tuple[int, ...]:
    try:
        return _int_list(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnsupportedType, InvalidPartition, GroupTooLarge, ValueError) as exc:
        print(f"springer-zmodel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
