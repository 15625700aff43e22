"""Generalized crowns, critical pairs and skeleton adjacency matrices."""

from ._crowns import (
    Matrix,
    ResourceError,
    VerificationError,
    VerifyReport,
    crit_pairs_closed_form,
    critical_pairs,
    hasse,
    hyperedges,
    matrix,
    parse_json,
    skeleton,
    sweep,
    verify,
)

__all__ = [
    "Matrix",
    "ResourceError",
    "VerificationError",
    "VerifyReport",
    "crit_pairs_closed_form",
    "critical_pairs",
    "hasse",
    "hyperedges",
    "matrix",
    "parse_json",
    "skeleton",
    "sweep",
    "verify",
]
