"""Canonical bases of minuscule tensor spaces for sp(2 infinity) and sl(infinity)."""

from ._cbasis import (
    CanonicalBasis,
    GuardError,
    InvariantError,
    LaurentPoly,
    TensorVec,
    block_stats,
    bruhat_leq,
    bruhat_relation,
    connect_to_z,
    construct_dominant,
    crystal,
    is_antidominant,
    is_typical,
    negativity_scan,
    prime_map,
    weight_diagram,
)

__all__ = [
    "CanonicalBasis",
    "GuardError",
    "InvariantError",
    "LaurentPoly",
    "TensorVec",
    "block_stats",
    "bruhat_leq",
    "bruhat_relation",
    "connect_to_z",
    "construct_dominant",
    "crystal",
    "is_antidominant",
    "is_typical",
    "negativity_scan",
    "prime_map",
    "weight_diagram",
]
