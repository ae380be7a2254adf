"""Finitely generated abelian groups given by generators and relations.

A presentation is a generator count plus an integer relation matrix (one
relation per row).  Smith normal form turns any presentation into its
invariant factors, which classify the group up to isomorphism; adjoining
universal fractions h/p realizes the pushout (H + Z^t)/<p_i*e_i - h_i>.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .zlinalg import IntMatrix, dot, smith_normal_form


@dataclass(frozen=True)
class AbelianPresentation:
    """Abelian group on ``generator_count`` generators modulo relation rows."""

    generator_count: int
    relations: IntMatrix

    def __post_init__(self):
        if self.generator_count < 0:
            raise ValueError("generator count must be nonnegative")
        if self.relations.cols != self.generator_count:
            raise ValueError(
                f"relation width {self.relations.cols} does not match {self.generator_count} generators"
            )

    @classmethod
    def free(cls, generator_count: int) -> "AbelianPresentation":
        return cls(generator_count, IntMatrix((), cols=generator_count))

    @classmethod
    def from_rows(cls, generator_count: int, rows: Sequence[Sequence[int]]) -> "AbelianPresentation":
        return cls(generator_count, IntMatrix(rows, cols=generator_count))


@dataclass(frozen=True)
class GroupInvariants:
    """Free rank plus torsion invariant factors d1 | d2 | ..., each >= 2."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for prev, cur in zip((1,) + self.torsion, self.torsion):
            if cur < 2:
                raise ValueError("torsion factors must be >= 2")
            if cur % prev:
                raise ValueError("torsion factors must form a divisibility chain")

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def invariants(presentation: AbelianPresentation) -> GroupInvariants:
    """Structure invariants of the presented group via Smith normal form."""
    _, diag, _ = smith_normal_form(presentation.relations)
    diagonal = [diag[i, i] for i in range(min(diag.rows, diag.cols))]
    rank_of_relations = sum(1 for d in diagonal if d)
    torsion = tuple(d for d in diagonal if d > 1)
    return GroupInvariants(presentation.generator_count - rank_of_relations, torsion)


def adjoin_fractions(
    presentation: AbelianPresentation,
    targets: Sequence[Sequence[int]],
    denominators: Sequence[int],
) -> AbelianPresentation:
    """Adjoin a universal fraction h_i/p_i for each target h_i.

    The result has one new generator per fraction and one new relation
    p_i * (new generator i) - h_i; the original relations are kept, padded
    with zeros on the new generators.
    """
    if len(targets) != len(denominators):
        raise ValueError("need exactly one denominator per target")
    count = len(targets)
    old = presentation.generator_count
    rows = []
    for row in presentation.relations:
        rows.append(tuple(row) + (0,) * count)
    for i, (target, denom) in enumerate(zip(targets, denominators)):
        if len(target) != old:
            raise ValueError(f"target width {len(target)} does not match {old} generators")
        if denom < 1:
            raise ValueError(f"denominators must be >= 1, got {denom}")
        rows.append(tuple(-int(h) for h in target) + tuple(denom if j == i else 0 for j in range(count)))
    return AbelianPresentation(old + count, IntMatrix(rows, cols=old + count))


def is_isomorphic(first: AbelianPresentation, second: AbelianPresentation) -> bool:
    """Groups are compared only up to isomorphism, i.e. equal invariants."""
    return invariants(first) == invariants(second)


def element_is_zero(presentation: AbelianPresentation, coordinates: Sequence[int]) -> bool:
    """Whether a generator-coordinate vector lies in the relation lattice.

    Decided through Smith normal form: with D = U*R*V, the vector w is an
    integer combination of the rows of R exactly when w*V is divisible
    entrywise by the diagonal of D (and vanishes beyond its nonzero part).
    """
    if len(coordinates) != presentation.generator_count:
        raise ValueError("coordinate width does not match generator count")
    _, diag, v = smith_normal_form(presentation.relations)
    transformed = tuple(dot(coordinates, v.column(j)) for j in range(v.cols))
    for j, value in enumerate(transformed):
        d = diag[j, j] if j < min(diag.rows, diag.cols) else 0
        if d == 0:
            if value:
                return False
        elif value % d:
            return False
    return True
