"""Finite commutative multiplicative hyperrings and closedness of hyperideals."""

from .bitsets import mask_of, members
from .closedness import (
    ZxResidueModel,
    big_omega,
    closed_profile,
    find_tough_zero,
    is_sn_Regular,
    is_sn_closed,
    is_sn_regular,
    is_weakly_sn_closed,
    omega,
    sn_closed_witness,
    weakly_sn_closed_witness,
    zx_residue_closed,
    zx_residue_weakly_closed,
)
from .core import (
    AxiomFailure,
    AxiomReport,
    EmptyOperand,
    FiniteHyperring,
    HomMap,
    HyperringError,
    MalformedTables,
    NotAHyperideal,
    OrderTooLarge,
    ProperIdealRequired,
    UnknownCheckId,
    WellDefinednessFailure,
    canonical_identity,
    check_good_hom,
    is_strongly_distributive,
    make_zx_mod,
    product_ring,
    scalar_identity,
    structure_flags,
    validate_axioms,
    weak_identities,
)
from .fundamental import (
    FundamentalRing,
    fundamental_ring,
    gamma_star_classes,
    ideal_in_fundamental,
)
from .harness import SuiteConfig, SuiteReport, TheoremReport, generate_instances, run_suite
from .ideals import (
    classify_ideal,
    enumerate_hyperideals,
    find_i_sets,
    generate_hyperideal,
    has_i_set,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_C_hyperideal,
    is_coprime,
    is_hyperideal,
    is_maximal,
    is_n_absorbing,
    is_prime,
    is_strong_C_hyperideal,
    nilpotents,
    prime_hyperideals,
    proper_hyperideals,
    quotient_by_ideal,
    radical,
    set_power,
    units,
    weak_zero_divisors,
)
from .checks import CHECKS, Check, CheckParams, Counterexample, RingOutcome, get_check

__version__ = "0.1.0"

__all__ = [
    "AxiomFailure",
    "AxiomReport",
    "CHECKS",
    "Check",
    "CheckParams",
    "Counterexample",
    "EmptyOperand",
    "FiniteHyperring",
    "FundamentalRing",
    "HomMap",
    "HyperringError",
    "MalformedTables",
    "NotAHyperideal",
    "OrderTooLarge",
    "ProperIdealRequired",
    "RingOutcome",
    "SuiteConfig",
    "SuiteReport",
    "TheoremReport",
    "UnknownCheckId",
    "WellDefinednessFailure",
    "ZxResidueModel",
    "big_omega",
    "canonical_identity",
    "check_good_hom",
    "classify_ideal",
    "closed_profile",
    "enumerate_hyperideals",
    "find_i_sets",
    "find_tough_zero",
    "fundamental_ring",
    "gamma_star_classes",
    "generate_hyperideal",
    "generate_instances",
    "get_check",
    "has_i_set",
    "ideal_in_fundamental",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "is_C_hyperideal",
    "is_coprime",
    "is_hyperideal",
    "is_maximal",
    "is_n_absorbing",
    "is_prime",
    "is_sn_Regular",
    "is_sn_closed",
    "is_sn_regular",
    "is_strong_C_hyperideal",
    "is_strongly_distributive",
    "is_weakly_sn_closed",
    "make_zx_mod",
    "mask_of",
    "members",
    "nilpotents",
    "omega",
    "prime_hyperideals",
    "product_ring",
    "proper_hyperideals",
    "quotient_by_ideal",
    "radical",
    "run_suite",
    "scalar_identity",
    "set_power",
    "sn_closed_witness",
    "structure_flags",
    "units",
    "validate_axioms",
    "weak_identities",
    "weak_zero_divisors",
    "weakly_sn_closed_witness",
    "zx_residue_closed",
    "zx_residue_weakly_closed",
]
