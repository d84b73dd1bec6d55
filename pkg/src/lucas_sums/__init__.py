"""Exact generalized Fibonacci/Lucas sequences, sums of their products,
and an identity audit engine."""

from .derived import DerivedKind, DerivedTable, derived_closed, derived_table
from .errors import (
    CorrectnessAlarm,
    DomainError,
    DomainViolation,
    InexactDivision,
    LucasError,
    MissingContext,
    NegativeIndexUnsupported,
    ParameterError,
    SumRequiresUnitQ,
    UnitQRequired,
    UnknownIdentity,
    ZeroDiscriminant,
    ZeroParameter,
)
from .identities import Grid, VerificationReport, catalog, check_identity, eval_correction, sweep, sweep_all
from .sequences import PRESETS, SequenceParams, SequencePoint, eval_naive, eval_pair, preset, validate_params
from .sums import (
    Pair,
    SumKind,
    SumQuery,
    SumResult,
    paired_sum_check,
    stride4_forms,
    stride4_sum,
    sum_closed,
    sum_naive,
    sum_split,
)

__version__ = "0.1.0"
