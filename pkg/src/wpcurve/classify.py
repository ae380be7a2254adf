"""Representation-type trichotomy and geometric trisection by Euler characteristic.

The sign of the orbifold Euler characteristic decides everything: positive
means tame domestic (spherical geometry), zero means tubular (parabolic),
negative means wild (hyperbolic).  The positive and zero weight lists for
genus zero are classical and are re-derived here as an internal consistency
check whenever a curve is classified.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .weightedk import WeightedCurveSpec


class RepresentationType(Enum):
    DOMESTIC = "domestic"
    TUBULAR = "tubular"
    WILD = "wild"


class GeometryType(Enum):
    SPHERICAL = "spherical"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class CurveClass:
    """Classification of a weighted curve.

    exclusion_flag marks the projective lines with two distinct weights
    (counting absent weights as 1), where the geometric trisection label is
    emitted by chi sign but not asserted.
    """

    rep_type: RepresentationType
    geometry: GeometryType
    chi: Fraction
    exclusion_flag: bool


# Genus-zero weight multisets (ascending) with positive / zero Euler characteristic
# beyond the two-weight families.
_POSITIVE_TRIPLES = {(2, 2), (2, 3, 3), (2, 3, 4), (2, 3, 5)}
_ZERO_MULTISETS = {(2, 3, 6), (2, 4, 4), (3, 3, 3), (2, 2, 2, 2)}


def _positive_list_member(weights: tuple[int, ...]) -> bool:
    if len(weights) <= 2:
        return True  # (p, q) with p, q >= 1, absent weights reading as 1
    if len(weights) == 3 and weights[:2] == (2, 2):
        return True  # (2, 2, n)
    return weights in _POSITIVE_TRIPLES


def classify(spec: WeightedCurveSpec) -> CurveClass:
    """Classify a weighted curve by the sign of its Euler characteristic."""
    chi = spec.euler_characteristic()
    normalized = tuple(sorted(spec.weights))
    if chi > 0:
        rep, geometry = RepresentationType.DOMESTIC, GeometryType.SPHERICAL
        assert spec.genus == 0 and _positive_list_member(normalized), (
            "positive Euler characteristic outside the domestic weight list"
        )
    elif chi == 0:
        rep, geometry = RepresentationType.TUBULAR, GeometryType.PARABOLIC
        assert (spec.genus == 0 and normalized in _ZERO_MULTISETS) or (
            spec.genus == 1 and not normalized
        ), "vanishing Euler characteristic outside the tubular list"
    else:
        rep, geometry = RepresentationType.WILD, GeometryType.HYPERBOLIC

    padded = (normalized + (1, 1))[:2]
    exclusion = spec.genus == 0 and len(normalized) <= 2 and padded[0] != padded[1]
    return CurveClass(rep, geometry, chi, exclusion)


def has_exceptional_sheaves(genus: int) -> bool:
    """A curve carries exceptional sheaves exactly in genus zero."""
    if genus < 0:
        raise ValueError(f"genus must be nonnegative, got {genus}")
    return genus == 0
