"""Assembly of the topological zeta function and extraction of its poles."""

from .assembly import (
    S_OVER_S_PLUS_ONE,
    ZetaResult,
    j_delta,
    j_tau,
    normalized_volume,
    topological_zeta,
)
from .poles import MINUS_ONE, CandidatePole, PoleReport, actual_poles, candidate_poles

__all__ = [
    "S_OVER_S_PLUS_ONE",
    "ZetaResult",
    "j_delta",
    "j_tau",
    "normalized_volume",
    "topological_zeta",
    "MINUS_ONE",
    "CandidatePole",
    "PoleReport",
    "actual_poles",
    "candidate_poles",
]
