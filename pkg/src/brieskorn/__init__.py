"""Terminality, weighted blow-ups and complements for Brieskorn-Pham singularities."""

from .blowup import (
    LogFanoPair,
    WeightVector,
    blowup_weights,
    diff_boundary,
    exceptional_discrepancy,
    is_log_fano,
)
from .complements import (
    Arrangement,
    ComplementBounds,
    ComplementDivisor,
    LcStatus,
    NoComplement,
    complement_coefficient_bounds,
    lc_status,
    lct,
    minimal_complement_index,
    n_complement,
)
from .model import (
    ExponentTuple,
    LatticeVector,
    discrepancy,
    discrepancy_lower_bound,
    newton_value,
    witness_vector,
)
from .numerics import ceil_div, floor_scale, format_rational, lcm_list, parse_rational
from .pipeline import AnalysisConfig, Report, SearchConfig, analyze, run_search, search
from .terminality import (
    BoundMode,
    SizeLimitError,
    TerminalityVerdict,
    brute_force_min_discrepancy,
    is_terminal,
    scan_bound,
)

__version__ = "0.1.0"
