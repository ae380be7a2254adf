"""Reduced Grothendieck group of a smooth projective curve of genus g.

The group is free of rank two on the class ``a`` of the structure sheaf and
the class ``s0`` of a simple (skyscraper) sheaf; every quantity here is a
small exact formula in the genus.  Coordinates are always taken in the
ordered basis (a, s0).
"""

from __future__ import annotations

from typing import Sequence

from .zlinalg import IntMatrix, dot

BASIS_LABELS = ("a", "s0")


def _check_genus(genus: int) -> int:
    if genus < 0:
        raise ValueError(f"genus must be nonnegative, got {genus}")
    return genus


def cartan_matrix(genus: int) -> IntMatrix:
    """Gram matrix of the Euler form on the basis (a, s0)."""
    _check_genus(genus)
    return IntMatrix([[1 - genus, 1], [-1, 0]])


def coxeter_matrix(genus: int) -> IntMatrix:
    """Matrix of the Coxeter transformation, i.e. -C^{-1} C^T for the Cartan matrix C."""
    _check_genus(genus)
    return IntMatrix([[1, 0], [2 * (genus - 1), 1]])


def euler_form(genus: int, u: Sequence[int], v: Sequence[int]) -> int:
    """Euler pairing <u, v> = u^T C v."""
    return dot(u, cartan_matrix(genus).apply(v))


def rank(u: Sequence[int]) -> int:
    """Rank of a class: its pairing against the simple class s0."""
    if len(u) != 2:
        raise ValueError("expected a coordinate vector of length 2")
    # <u, s0> with any genus; the genus terms cancel.
    return u[0]


def degree(genus: int, u: Sequence[int]) -> int:
    """Degree of a class: <a, u> - <a, a> * rank(u)."""
    a = (1, 0)
    return euler_form(genus, a, u) - (1 - genus) * rank(u)


def riemann_roch(genus: int, u: Sequence[int], v: Sequence[int]) -> int:
    """(1-g) rk(u) rk(v) plus the rank/degree determinant; equals the Euler form."""
    ru, rv = rank(u), rank(v)
    return (1 - genus) * ru * rv + (ru * degree(genus, v) - rv * degree(genus, u))


def euler_characteristic(genus: int) -> int:
    """2(1 - g), twice the self-pairing of the structure class."""
    _check_genus(genus)
    return 2 * (1 - genus)
