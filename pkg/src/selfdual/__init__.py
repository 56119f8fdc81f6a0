"""Self-dual binary codes from group-ring matrices [I_n | sigma(v)]."""

from __future__ import annotations

from .codes import (
    Analysis,
    BudgetExceeded,
    ClassificationError,
    EnumeratorClass,
    MinDistance,
    NotSelfDual,
    PartialWeightSpectrum,
    SelfDualCode,
    analyze,
    build_code,
    classify,
    classify_counts,
    min_distance,
    partial_spectrum,
)
from .gf2 import BitMatrix, BitWord
from .groups import FiniteGroup, GroupRingElement, parse_group_id, sigma
from .registry import KnownParamRecord, Registry, ResultRecord, ResultsLog, Verdict, shipped_known
from .search import GaParams, SearchOutcome, ga_run, linear_search

__all__ = [
    "Analysis", "BitMatrix", "BitWord", "BudgetExceeded", "ClassificationError",
    "EnumeratorClass", "FiniteGroup", "GaParams", "GroupRingElement", "KnownParamRecord",
    "MinDistance", "NotSelfDual", "PartialWeightSpectrum", "Registry", "ResultRecord",
    "ResultsLog", "SearchOutcome", "SelfDualCode", "Verdict", "analyze", "build_code",
    "classify", "classify_counts", "ga_run", "linear_search", "min_distance",
    "parse_group_id", "partial_spectrum", "shipped_known", "sigma",
]
