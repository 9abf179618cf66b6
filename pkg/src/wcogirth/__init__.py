"""Weighted cogirth of matroids representable over small finite fields."""

from __future__ import annotations

from .cogirth import Cocircuit, classify_cocircuits, cocircuits, cogirth, cogirth_oracle
from .errors import (
    DimensionError,
    EnumerationCapError,
    FieldError,
    NotAFlatError,
    NotSimpleError,
    ParseError,
    PreconditionError,
    ProjectiveGeometryError,
    RankZeroError,
    WcogirthError,
)
from .geometry import (
    Embedding,
    ProjectivePointSet,
    ag,
    bose_burton,
    closure,
    embed_in_pg,
    flat_rank,
    hyperplane,
    hyperplanes_containing,
    pg,
    pk1_copies_containing,
)
from .gf import FieldSpec, field_spec, gf_add, gf_inv, gf_mul, gf_neg, gf_pow, gf_sub
from .linalg import GFMatrix, in_span, null_space, rank, rref
from .matroid import (
    ParallelClass,
    WeightedRepMatroid,
    delete,
    from_matrix,
    is_simple,
    loops,
    parallel_classes,
    simplify,
    total_weight,
    weighted_contract,
)
from .verify import (
    ConditionResult,
    ScanReport,
    ScanSpec,
    VerificationReport,
    check_auto,
    check_condition_iii_prime,
    check_main_theorem,
    check_pg_proposition,
    check_rank2,
    check_typeII_sublemma,
    paper_example,
    scan,
)

__version__ = "0.1.0"
