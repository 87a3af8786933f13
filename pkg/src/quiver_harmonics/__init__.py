"""Stable graded K-type multiplicities for cyclic-quiver harmonics.

The main entry points:

- ``stable_multiplicity``: the distinguished-tableau generating function.
- ``stable_multiplicity_definition``: the LR-sum definition, as an oracle.
- ``harmonic_multiplicity_oracle``: explicit character theory on a tiny
  quiver, valid up to degree min(dims).
- ``hesselink_exponent``: generalized exponents for the k = 1 case.
"""

from .partitions import (
    BasisError,
    Partition,
    WeightVector,
    as_partition,
    enumerate_partitions,
    epsilon_to_omega,
    leq_omega,
    omega_to_epsilon,
    partition_shift,
)
from .tableaux import (
    Tableau,
    enumerate_sst,
    epsilon_string,
    epsilon_vector,
    lower,
    phi_string,
    raise_,
    weight,
)
from .lr import clr_contains, lr_coefficient_classical, lr_coefficient_crystal
from .qseries import QSeries, euler_factor, partition_series
from .stable import (
    KType,
    LambdaProfile,
    TableauTuple,
    branching_sum,
    enumerate_distinguished,
    is_distinguished,
    lambda_min,
    lambda_profile,
    separation_check,
    stable_multiplicity,
    stable_multiplicity_definition,
    tuple_weight,
)
from .character import (
    CapacityError,
    LaurentPolynomial,
    NotACharacterError,
    QuiverConfig,
    RationalWeight,
    decompose_into_ktypes,
    graded_coordinate_character,
    harmonic_multiplicity_oracle,
    hesselink_exponent,
    q_kostant_partition,
    rational_weight,
    schur_rational,
)

__all__ = [
    "BasisError",
    "CapacityError",
    "KType",
    "LambdaProfile",
    "LaurentPolynomial",
    "NotACharacterError",
    "Partition",
    "QSeries",
    "QuiverConfig",
    "RationalWeight",
    "Tableau",
    "TableauTuple",
    "WeightVector",
    "as_partition",
    "branching_sum",
    "clr_contains",
    "decompose_into_ktypes",
    "enumerate_distinguished",
    "enumerate_partitions",
    "enumerate_sst",
    "epsilon_string",
    "epsilon_to_omega",
    "epsilon_vector",
    "euler_factor",
    "graded_coordinate_character",
    "harmonic_multiplicity_oracle",
    "hesselink_exponent",
    "is_distinguished",
    "lambda_min",
    "lambda_profile",
    "leq_omega",
    "lower",
    "lr_coefficient_classical",
    "lr_coefficient_crystal",
    "omega_to_epsilon",
    "partition_series",
    "partition_shift",
    "phi_string",
    "q_kostant_partition",
    "raise_",
    "rational_weight",
    "schur_rational",
    "separation_check",
    "stable_multiplicity",
    "stable_multiplicity_definition",
    "tuple_weight",
    "weight",
]

__version__ = "0.1.0"
