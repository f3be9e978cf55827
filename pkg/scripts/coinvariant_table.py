"""Freeness numerators of the Borel models next to the length polynomials of W.

    python scripts/coinvariant_table.py [--types A1,A2,A3,B2,C3]
"""

import argparse
import time

from springer_zmodel import freeness_certificate, length_generating_function
from springer_zmodel.verify import model


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--types", default="A1,A2,A3,B2,C3")
    args = ap.parse_args()
    print(f"{'type':<5} {'|W|':>4} {'ok':>3} {'sec':>6}  numerator")
    for name in args.types.split(","):
        t0 = time.perf_counter()
        zm = model(name[0].upper(), int(name[1:]), ())
        cert = freeness_certificate(zm)
        ok = cert.passed and list(cert.numerator) == length_generating_function(zm.weyl)
        print(f"{name:<5} {len(zm.weyl):>4} {'yes' if ok else 'NO':>3} {time.perf_counter() - t0:>6.1f}  "
              f"{list(cert.numerator)}")


if __name__ == "__main__":
    main()
