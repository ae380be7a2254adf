"""Divisor class groups and Picard groups of weighted projective lines.

Three independent presentations of the same group are available: the
rank-one group L(p_1, ..., p_t) on the weighted point classes, the universal
fraction extension Z[1/p_1, ..., 1/p_t], and the quotient of the rank-zero
part of the Grothendieck group by the tau-differences of weighted simples.
Genus zero only: for higher genus the class group contains the Jacobian,
which is divisible and not finitely generated, so it is refused rather than
approximated.

Generator convention for L: index 0 is the class c of an ordinary point,
then one generator per weighted point in input order, with relations
c = p_i * x_i.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .abgroup import (
    AbelianPresentation,
    GroupInvariants,
    adjoin_fractions,
    element_is_zero,
    invariants,
)
from .sheafclass import Divisor
from .weightedk import WeightedCurveSpec
from .zlinalg import IntMatrix


def lgroup(weights: Sequence[int]) -> AbelianPresentation:
    """Rank-one group on generators c, x_1, ..., x_t with relations c = p_i x_i."""
    weights = [int(w) for w in weights]
    for w in weights:
        if w < 2:
            raise ValueError(f"weights must be >= 2, got {w}")
    count = len(weights)
    rows = [
        tuple(1 if j == 0 else -p if j == i + 1 else 0 for j in range(count + 1))
        for i, p in enumerate(weights)
    ]
    return AbelianPresentation(count + 1, IntMatrix(rows, cols=count + 1))


def _require_genus_zero(spec: WeightedCurveSpec, what: str) -> None:
    if spec.genus != 0:
        raise ValueError(
            f"{what} is only supported for genus 0; the genus-{spec.genus} class group "
            "contains a divisible Jacobian part and is not finitely generated"
        )


def picard_invariants(spec: WeightedCurveSpec) -> GroupInvariants:
    """Invariants of the Picard group of a genus-zero weighted curve.

    Computed from the L-group presentation and cross-checked against the
    universal-fraction construction Z[1/p_1, ..., 1/p_t].
    """
    _require_genus_zero(spec, "Picard group computation")
    result = invariants(lgroup(spec.weights))
    adjoined = adjoin_fractions(
        AbelianPresentation.free(1), [(1,)] * len(spec.weights), list(spec.weights)
    )
    assert result == invariants(adjoined), "universal-fraction construction disagrees with L-group"
    return result


def divisor_class(spec: WeightedCurveSpec, divisor: Divisor) -> tuple[int, ...]:
    """Coordinates of a divisor's class in the generators (c, x_1, ..., x_t).

    Ordinary points all map to c; the weighted point x_i maps to its own
    generator.  Raw coordinates are returned; compare classes through
    linearly_equivalent.
    """
    _require_genus_zero(spec, "divisor class computation")
    names = spec.names
    coords = [0] * (len(names) + 1)
    for name, multiplicity in divisor.items():
        if name in names:
            coords[names.index(name) + 1] += multiplicity
        else:
            coords[0] += multiplicity
    return tuple(coords)


def linearly_equivalent(spec: WeightedCurveSpec, first: Divisor, second: Divisor) -> bool:
    """Whether two divisors have the same class in the divisor class group."""
    _require_genus_zero(spec, "linear equivalence")
    difference = tuple(
        x - y for x, y in zip(divisor_class(spec, first), divisor_class(spec, second))
    )
    return element_is_zero(lgroup(spec.weights), difference)


def cl_from_k0(spec: WeightedCurveSpec) -> AbelianPresentation:
    """The class group as a quotient of the rank-zero part of the Grothendieck group.

    Generators: s0 and the kept orbit members tau^j s_i (j = 1..p_i - 1) of
    every weighted point; relations identify all members of each orbit,
    where the omitted member tau^0 s_i stands for s0 minus the block sum.
    """
    _require_genus_zero(spec, "class group from the Grothendieck group")
    sizes = [p - 1 for p in spec.weights]
    generators = 1 + sum(sizes)
    starts = []
    column = 1
    for size in sizes:
        starts.append(column)
        column += size

    def orbit_vector(point_index: int, j: int) -> list[int]:
        coords = [0] * generators
        start = starts[point_index]
        size = sizes[point_index]
        if j == 0:
            coords[0] = 1
            for k in range(size):
                coords[start + k] -= 1
        else:
            coords[start + j - 1] = 1
        return coords

    rows = []
    for i, p in enumerate(spec.weights):
        base = orbit_vector(i, 1)
        for j in range(p):
            vec = orbit_vector(i, j)
            rows.append(tuple(x - y for x, y in zip(vec, base)))
    return AbelianPresentation(generators, IntMatrix(rows, cols=generators))


def riemann_hurwitz(chi: Fraction | int, group_order: int) -> Fraction:
    """Euler characteristic of a finite orbifold quotient: chi / |G|."""
    order = int(group_order)
    if order < 1:
        raise ValueError(f"group order must be >= 1, got {group_order}")
    return Fraction(chi) / order


def quotient_weight(weight: int, stabilizer_order: int) -> int:
    """Weight of an orbit point in the quotient: w(x) * |G_x|."""
    w, s = int(weight), int(stabilizer_order)
    if w < 1 or s < 1:
        raise ValueError("weight and stabilizer order must be >= 1")
    return w * s
