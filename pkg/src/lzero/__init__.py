"""Exact Dirichlet L-values at s = 0 and their p-adic integrality.

The package computes L(0, chi) as an exact cyclotomic number (so every
verdict is a statement about integers, never about floats), embeds values
into a reproducible model of the completion at a fixed place above p, and
mechanically verifies the proved statements about their integrality while
collecting evidence for the conjectural ones.
"""

from .errors import (
    ClassificationViolation,
    CongruenceViolation,
    ImprimitiveInput,
    IncompatibleOrders,
    IntegralityViolation,
    LZeroError,
    NoOrderPCharacter,
    NonIntegralResult,
    NotPrimePower,
    PrecisionExhausted,
    TheoremViolation,
)
from .cyclo import CycloElt, IntPoly, cyclotomic_poly, phi_degree
from .characters import (
    DirichletChar,
    char_eval,
    conductor,
    enumerate_characters,
    eval_exponent,
    induce,
    is_odd,
    is_primitive,
    is_trivial,
    mul_chars,
    pow_char,
    primitive_odd_characters,
    primitivize,
    tame_wild_decomposition,
    unit_group_basis,
)
from .bernoulli import (
    LValueRecord,
    bernoulli_number,
    irregular_pairs,
    l_value_at_zero,
    minus_class_number,
    set_cache_dir,
)
from .padic import (
    ABOVE_PRECISION,
    N_CAP,
    N_START,
    PadicElt,
    PadicTower,
    build_tower,
    char_is_omega_power_mod_p,
    cyclo_valuation,
    embed_padic,
    padic_residue,
    padic_valuation,
    residue_factor,
    teichmuller,
)
from .scans import (
    BoundRecord,
    CongruencePair,
    CongruenceReport,
    CongruenceRow,
    PoleDepthRow,
    ProductIdentityReport,
    VerdictRecord,
    deligne_ribet_check,
    deligne_ribet_scan,
    integrality_verdict,
    kummer_check,
    kummer_scan,
    nonintegral_locus_scan,
    odd_product_identity_check,
    omega_char,
    omega_inverse_char,
    pole_depth_check,
    residue_congruence_scan,
    root_of_unity_order,
    straightened_character,
    twisted_pair_witness,
)
from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = [
    "ABOVE_PRECISION",
    "BoundRecord",
    "ClassificationViolation",
    "CongruencePair",
    "CongruenceReport",
    "CongruenceRow",
    "CongruenceViolation",
    "CycloElt",
    "DirichletChar",
    "ImprimitiveInput",
    "IncompatibleOrders",
    "IntegralityViolation",
    "IntPoly",
    "KERNEL_BACKEND",
    "LValueRecord",
    "LZeroError",
    "N_CAP",
    "N_START",
    "NonIntegralResult",
    "NoOrderPCharacter",
    "NotPrimePower",
    "PadicElt",
    "PadicTower",
    "PoleDepthRow",
    "PrecisionExhausted",
    "ProductIdentityReport",
    "TheoremViolation",
    "VerdictRecord",
    "bernoulli_number",
    "build_tower",
    "char_eval",
    "char_is_omega_power_mod_p",
    "conductor",
    "cyclo_valuation",
    "cyclotomic_poly",
    "deligne_ribet_check",
    "deligne_ribet_scan",
    "embed_padic",
    "enumerate_characters",
    "eval_exponent",
    "induce",
    "integrality_verdict",
    "irregular_pairs",
    "is_odd",
    "is_primitive",
    "is_trivial",
    "kummer_check",
    "kummer_scan",
    "l_value_at_zero",
    "minus_class_number",
    "mul_chars",
    "nonintegral_locus_scan",
    "odd_product_identity_check",
    "omega_char",
    "omega_inverse_char",
    "padic_residue",
    "padic_valuation",
    "phi_degree",
    "pole_depth_check",
    "pow_char",
    "primitive_odd_characters",
    "primitivize",
    "residue_congruence_scan",
    "residue_factor",
    "root_of_unity_order",
    "set_cache_dir",
    "straightened_character",
    "tame_wild_decomposition",
    "teichmuller",
    "twisted_pair_witness",
    "unit_group_basis",
    "__version__",
]
