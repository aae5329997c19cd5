"""Highest weight vectors in plethysms S^d(Wedge^k W), with exact verification."""

from .partitions import conjugate, dominance_leq, is_even, parse_partition, schur_dimension
from .multilinear import SymVector, TensorVector, canonical_wedge, raising_op, symmetrize, weight_of, hwv_space_dim
from .pieri import PieriTableau, build_rT, build_wT, enumerate_pieri_tableaux, pair, tableau_leq
from .weintraub import certify, expand_P, identity_term, q_coefficient, run_algorithm, verify_highest_weight
from .oracle import decompose, duality_check, kostka, weight_multiplicities, weintraub_positivity_scan
from .asymptotics import s_kd, stabilization_check

__version__ = "0.1.0"

__all__ = [
    "conjugate", "dominance_leq", "is_even", "parse_partition", "schur_dimension",
    "SymVector", "TensorVector", "canonical_wedge", "raising_op", "symmetrize", "weight_of", "hwv_space_dim",
    "PieriTableau", "build_rT", "build_wT", "enumerate_pieri_tableaux", "pair", "tableau_leq",
    "certify", "expand_P", "identity_term", "q_coefficient", "run_algorithm", "verify_highest_weight",
    "decompose", "duality_check", "kostka", "weight_multiplicities", "weintraub_positivity_scan",
    "s_kd", "stabilization_check",
]
