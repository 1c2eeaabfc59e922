"""Link-polynomial invariants of forest quivers.

Three independent computation routes — a leaf recursion, a closed
independent-set expansion, and a skein evaluation on plabic graphs built
from the quiver — plus the Alexander, Conway and finite-field point-count
specializations, all in exact integer arithmetic.
"""

from .forest import Forest, parse_forest
from .invariants import (
    InvariantReport,
    alexander,
    compute_report,
    conway_coefficients,
    homfly_closed,
    homfly_recursive,
    log_concavity_check,
    p_top_check,
    r_polynomial,
)
from .laurent import BivariateLaurent, HalfLaurent, UnivariatePoly

__all__ = [
    "Forest",
    "parse_forest",
    "BivariateLaurent",
    "HalfLaurent",
    "UnivariatePoly",
    "homfly_recursive",
    "homfly_closed",
    "alexander",
    "conway_coefficients",
    "r_polynomial",
    "p_top_check",
    "log_concavity_check",
    "InvariantReport",
    "compute_report",
]

__version__ = "0.1.0"
