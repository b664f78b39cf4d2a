"""Exact Wigner 3j symbols, their hypergeometric forms, and their zeros."""

from .errors import *  # noqa: F401,F403
from .exact import HalfInt, SqrtRational, factorial
from .threej import (
    ReggeSquare,
    ThreeJ,
    canonical_form,
    degree,
    from_regge,
    racah_value,
    raynal_order,
    regge_value,
    symmetry_orbit,
    to_regge,
    trivial_zero_reason,
)
from .zeros import ZeroRecord, classify
from .census import CensusConfig, CensusReport, run_census

__version__ = "0.1.0"

__all__ = [
    "HalfInt",
    "SqrtRational",
    "factorial",
    "ThreeJ",
    "ReggeSquare",
    "racah_value",
    "regge_value",
    "to_regge",
    "from_regge",
    "symmetry_orbit",
    "canonical_form",
    "degree",
    "raynal_order",
    "trivial_zero_reason",
    "classify",
    "ZeroRecord",
    "CensusConfig",
    "CensusReport",
    "run_census",
]
