"""Exact arithmetic on additive systems of nonnegative integers."""

from addsys.classify import (
    BritishNumberSystem,
    ClassificationResult,
    ExtractionStep,
    GeneratorSchedule,
    bns_equal,
    build_bns,
    classify,
    extraction_step,
    expand,
    is_decomposable_set,
    is_indecomposable_system,
)
from addsys.codec import MixedRadixDigits, decode, encode, preset
from addsys.dsl import parse_set_expr, parse_system, print_system, to_system
from addsys.errors import AddsysError
from addsys.lab import Mode, SearchOutcome, SearchProblem, search
from addsys.sets import (
    NATURALS,
    ZERO,
    DirectSum,
    Dilated,
    Finite,
    Interval,
    Tail,
    contains,
    dilated,
    direct_sum,
    enumerate_set,
    finite,
    interval,
    sets_equal,
)
from addsys.systems import AdditiveSystem, VerificationReport, verify
from addsys.transforms import (
    IndexPartition,
    Witness,
    apply_witness,
    compose_contraction_dilation,
    compose_contractions,
    contract,
    dilate,
    dilate_family,
)

__version__ = "0.1.0"

__all__ = [
    "BritishNumberSystem",
    "ClassificationResult",
    "ExtractionStep",
    "GeneratorSchedule",
    "bns_equal",
    "build_bns",
    "classify",
    "extraction_step",
    "expand",
    "is_decomposable_set",
    "is_indecomposable_system",
    "MixedRadixDigits",
    "decode",
    "encode",
    "preset",
    "parse_set_expr",
    "parse_system",
    "print_system",
    "to_system",
    "AddsysError",
    "Mode",
    "SearchOutcome",
    "SearchProblem",
    "search",
    "NATURALS",
    "ZERO",
    "DirectSum",
    "Dilated",
    "Finite",
    "Interval",
    "Tail",
    "contains",
    "dilated",
    "direct_sum",
    "enumerate_set",
    "finite",
    "interval",
    "sets_equal",
    "AdditiveSystem",
    "VerificationReport",
    "verify",
    "IndexPartition",
    "Witness",
    "apply_witness",
    "compose_contraction_dilation",
    "compose_contractions",
    "contract",
    "dilate",
    "dilate_family",
]
