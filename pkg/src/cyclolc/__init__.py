"""Linear complexity of order-4 Whiteman generalized cyclotomic sequences."""
from .cyclotomy import (
    CyclotomySystem,
    QuarticDecomposition,
    ResidueClass,
    build_system,
    classify,
    cyclotomic_numbers_bruteforce,
    cyclotomic_numbers_formula,
    quartic_decomposition,
)
from .errors import CycloError
from .gfpoly import Poly, berlekamp_massey, linear_complexity_bm, linear_complexity_gcd
from .numthy import PrimePair, common_primitive_root, generator_from_roots
from .predict import VerificationReport, evaluate_predicates, predict_complexity, verify
from .seqgen import PeriodicSequence, SequenceSpec, generate, whiteman_sequence

__version__ = "0.1.0"

__all__ = [
    "CycloError",
    "CyclotomySystem",
    "PeriodicSequence",
    "Poly",
    "PrimePair",
    "QuarticDecomposition",
    "ResidueClass",
    "SequenceSpec",
    "VerificationReport",
    "berlekamp_massey",
    "build_system",
    "classify",
    "common_primitive_root",
    "cyclotomic_numbers_bruteforce",
    "cyclotomic_numbers_formula",
    "evaluate_predicates",
    "generate",
    "generator_from_roots",
    "linear_complexity_bm",
    "linear_complexity_gcd",
    "predict_complexity",
    "quartic_decomposition",
    "verify",
    "whiteman_sequence",
]
