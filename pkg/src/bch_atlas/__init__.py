"""Coset leaders, dimensions and generator polynomials of binary BCH codes of length 2^m + 1."""

from .closed_form import (
    DeltaLadder, IntervalPartition, LeaderVerdict, Scheme, classify_leader, coset_cardinality,
    delta_ladder, envelope, ia_partition, interval_locate, reconstruct_interval,
)
from .cosets import (
    CodeLength, CosetRecord, DefiningSet, Family, bose_distance, coset_of, defining_set,
    enumerate_leaders, is_coset_leader, top_leaders,
)
from .errors import (
    CapacityError, DegenerateCodeError, DomainError, OutOfTheoremRange, ParityError, UnsupportedFamily,
)
from .gf2 import (
    BinaryPolynomial, FieldContext, build_field, encode, generator_polynomial, is_self_reciprocal,
    min_weight_exhaustive, minimal_polynomial,
)
from .params import (
    CodeSpec, dim_aly, dim_lower_bound_generic, dim_small_delta, dimension_brute, dimension_closed,
)
from .tables import emit_table
from .verify import VerificationReport, verify

__version__ = "0.1.0"
