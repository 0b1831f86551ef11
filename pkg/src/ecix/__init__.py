"""Eccentric connectivity index: computation, extremal families, exhaustive
enumeration of connected graphs, and verifiers for extremal statements."""

from .canon import canonical_form, canonical_key, is_isomorphic
from .enumeration import ClassFilter, Dominating, count_connected, enumerate_connected
from .extremal import (
    Direction,
    ExtremalResult,
    Verdict,
    VerificationOutcome,
    conjecture_params,
    search_extremal,
    verify,
    zd10_params,
)
from .families import FamilySpec, closed_eci, construct
from .graph import (
    EciReport,
    Graph,
    bfs_distances,
    build_graph,
    diameter,
    dominating_count,
    eccentricities,
    eci,
    eci_report,
    pending_count,
)
from .graph6 import decode_graph6, encode_graph6
from .report import emit_report

__all__ = [
    "ClassFilter", "Direction", "Dominating", "EciReport", "ExtremalResult", "FamilySpec", "Graph",
    "Verdict", "VerificationOutcome", "bfs_distances", "build_graph", "canonical_form", "canonical_key",
    "closed_eci", "conjecture_params", "construct", "count_connected", "decode_graph6", "diameter",
    "dominating_count", "eccentricities", "eci", "eci_report", "emit_report", "encode_graph6",
    "enumerate_connected", "is_isomorphic", "pending_count", "search_extremal", "verify", "zd10_params",
]
