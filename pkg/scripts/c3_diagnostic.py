"""Betti table of the C3 model for the Levi {1,2} against the known Springer fiber.

    python scripts/c3_diagnostic.py
"""

from springer_zmodel import betti_table, character_of_H, freeness_certificate, inner_product, surjectivity_diagnostic
from springer_zmodel.characters import reflection_character
from springer_zmodel.verify import C3_LEVI, C3_TRUE_BETTI, model


def main():
    zm = model(*C3_LEVI)
    bt = betti_table(zm)
    cert = freeness_certificate(zm)
    print(f"{zm.label}: {zm.components} components, dim s = {zm.dim_s}")
    print(f"Hilbert function  {list(cert.dims)}")
    print(f"model betti       {list(bt.betti)}  (H^0, H^2, ...)")
    print(f"Springer fiber    {list(C3_TRUE_BETTI)}")
    print(f"certificate       {'passed' if cert.passed else 'FAILED'}, P(1) = {cert.numerator_at_one()}")
    print(f"diagnostic        {surjectivity_diagnostic(zm, C3_TRUE_BETTI).summary()}")
    refl = reflection_character(zm.weyl)
    for d in range(len(bt.betti)):
        chi = character_of_H(zm, d)
        print(f"  H_{d}: dim {chi.degree}, <chi,chi> = {inner_product(chi, chi)}, "
              f"<chi,refl> = {inner_product(chi, refl)}")


if __name__ == "__main__":
    main()
