"""Hodge diamonds, Euler characteristics and families of Borcea-Voisin orbifolds."""

from ._bvorb import (
    HodgeDiamond,
    K3Class,
    OrbifoldReport,
    catalog,
    crepant_survey,
    enumerate,
    fixed_locus,
    fourfold,
    mirror_check,
    mirror_search,
    p2_matrix,
    shift_counts,
    supported_primes,
    threefold,
    verify,
)

__all__ = [
    "HodgeDiamond",
    "K3Class",
    "OrbifoldReport",
    "catalog",
    "crepant_survey",
    "enumerate",
    "fixed_locus",
    "fourfold",
    "mirror_check",
    "mirror_search",
    "p2_matrix",
    "shift_counts",
    "supported_primes",
    "threefold",
    "verify",
]
