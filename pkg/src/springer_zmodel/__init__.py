"""Exact Hilbert functions, Betti tables and W-characters of the variety
Z_l = {(x, w x) : w in W, x in s} attached to a Levi subalgebra l."""

from springer_zmodel.characters import (
    ClassFunction,
    action_on_H,
    character_of_H,
    inner_product,
    reflection_character,
    trivial_character,
)
from springer_zmodel.cohomology import (
    BettiTable,
    FreenessCertificate,
    betti_table,
    freeness_certificate,
    surjectivity_diagnostic,
)
from springer_zmodel.exact_linalg import ExactMatrix, column_space_contains, kernel_basis, rank_exact, rank_modular
from springer_zmodel.oracle import length_generating_function, random_point_rank
from springer_zmodel.roots import (
    build_root_system,
    conjugacy_classes,
    enumerate_weyl,
    parabolic_data,
    partition_to_levi,
)
from springer_zmodel.zmodel import (
    ZModel,
    build_zmodel,
    evaluation_matrix,
    hilbert_dim,
    restriction_factors,
    weyl_group,
)

__version__ = "0.1.0"
