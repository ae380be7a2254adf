"""Shared helpers: the standard parameter sweep, cached lattice builds, and
brute-force oracles kept independent of the library code they check."""

from functools import lru_cache
from itertools import combinations_with_replacement

from wpcurve import WeightedCurveSpec, build


def sweep_weights(max_points=4, weight_low=2, weight_high=6):
    """All weight multisets with at most max_points entries in the range."""
    for count in range(max_points + 1):
        yield from combinations_with_replacement(range(weight_low, weight_high + 1), count)


def sweep_specs(genus_max=3, max_points=4, weight_low=2, weight_high=6):
    """The standard (genus, weights) sweep used across the invariants tests."""
    for genus in range(genus_max + 1):
        for weights in sweep_weights(max_points, weight_low, weight_high):
            yield genus, weights


@lru_cache(maxsize=None)
def cached_lattice(genus, weights):
    return build(WeightedCurveSpec.from_weights(genus, weights))


def det_cofactor(rows):
    """Determinant by cofactor expansion; slow but independent of the library."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    first = rows[0]
    rest = rows[1:]
    sign = 1
    for j in range(n):
        if first[j]:
            minor = [row[:j] + row[j + 1:] for row in rest]
            total += sign * first[j] * det_cofactor(minor)
        sign = -sign
    return total
