"""Model Betti tables for every partition of n in type A_{n-1}.

    python scripts/type_a_survey.py --n 4
"""

import argparse
from math import factorial, prod

from springer_zmodel import betti_table, freeness_certificate
from springer_zmodel.verify import type_a_model


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=4)
    args = ap.parse_args()
    for mu in partitions(args.n):
        zm = type_a_model(args.n, mu)
        bt = betti_table(zm)
        index = factorial(args.n) // prod(factorial(m) for m in mu)
        cert = freeness_certificate(zm)
        print(f"mu={mu!s:<14} betti={list(bt.betti)!s:<24} total={bt.total:<4} index={index:<4} "
              f"free={'yes' if cert.passed else 'no'}")


if __name__ == "__main__":
    main()
