"""Certified boundedness and moment-growth analysis for lattice jump processes."""

__version__ = "0.1.0"

from .boundedness import (
    BoundednessCertificate,
    CriticalPartition,
    UnboundednessWitness,
    classify,
    construct_monotone_norm,
    decide_species_boundedness,
    decide_subset_boundedness,
    explore_accessible,
    unboundedness_threshold,
)
from .certificates import (
    BlowupCertificate,
    MomentCertificate,
    NotCertified,
    check_theorem1,
    check_theorem2,
    check_theorem3,
)
from .dsl import DslError, load_network, parse_network
from .feasibility import FeasibilitySystem, alternative_witness, integerize, solve
from .network import (
    ReactionNetwork,
    build_mass_action,
    check_regularity,
    drift,
    mass_action_reaction,
    poly_reaction,
    validate_properness,
    weighted_drift,
)
from .polynomial import Polynomial, falling_factorial, parse_polynomial
from .simulation import (
    EnsembleStats,
    Trajectory,
    TruncatedDistribution,
    estimate_moments,
    integrate_forward_equations,
    simulate,
)

__all__ = [
    "__version__",
    "BoundednessCertificate",
    "BlowupCertificate",
    "CriticalPartition",
    "DslError",
    "EnsembleStats",
    "FeasibilitySystem",
    "MomentCertificate",
    "NotCertified",
    "Polynomial",
    "ReactionNetwork",
    "Trajectory",
    "TruncatedDistribution",
    "UnboundednessWitness",
    "alternative_witness",
    "build_mass_action",
    "check_regularity",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "classify",
    "construct_monotone_norm",
    "decide_species_boundedness",
    "decide_subset_boundedness",
    "drift",
    "estimate_moments",
    "explore_accessible",
    "falling_factorial",
    "integerize",
    "integrate_forward_equations",
    "load_network",
    "mass_action_reaction",
    "parse_network",
    "parse_polynomial",
    "poly_reaction",
    "simulate",
    "solve",
    "unboundedness_threshold",
    "validate_properness",
    "weighted_drift",
]
