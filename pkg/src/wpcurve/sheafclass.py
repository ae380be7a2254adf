"""K-classes of named sheaves and the point-shift action on them.

A KClass is an integer coordinate vector in the canonical basis of a
weighted lattice.  Divisors are finite formal sums of named points; names
that match the curve's weighted points refer to those, any other identifier
denotes an ordinary point.  Shifting by a point is the lattice shadow of the
universal-extension twist and acts as a unimodular isometry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .weightedk import WeightedLattice
from .zlinalg import IntMatrix, rational_inverse


@dataclass(frozen=True)
class KClass:
    """Element of a weighted lattice, as coordinates in the canonical basis."""

    lattice: WeightedLattice
    coordinates: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coordinates)
        object.__setattr__(self, "coordinates", coords)
        if len(coords) != self.lattice.rank:
            raise ValueError(
                f"coordinate width {len(coords)} does not match lattice rank {self.lattice.rank}"
            )

    def __iter__(self) -> Iterator[int]:
        return iter(self.coordinates)

    def __len__(self) -> int:
        return len(self.coordinates)

    def _require_same_lattice(self, other: "KClass") -> None:
        if self.lattice is not other.lattice:
            raise ValueError("classes live on different lattices")

    def __add__(self, other: "KClass") -> "KClass":
        self._require_same_lattice(other)
        return KClass(self.lattice, tuple(x + y for x, y in zip(self.coordinates, other.coordinates)))

    def __sub__(self, other: "KClass") -> "KClass":
        self._require_same_lattice(other)
        return KClass(self.lattice, tuple(x - y for x, y in zip(self.coordinates, other.coordinates)))

    def __neg__(self) -> "KClass":
        return KClass(self.lattice, tuple(-x for x in self.coordinates))

    def __rmul__(self, scalar: int) -> "KClass":
        return KClass(self.lattice, tuple(scalar * x for x in self.coordinates))


class Divisor:
    """Finite formal integer combination of named points."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        cleaned: dict[str, int] = {}
        for name, multiplicity in dict(coefficients).items():
            m = int(multiplicity)
            if not isinstance(name, str) or not name:
                raise ValueError("point names must be nonempty strings")
            if m:
                cleaned[name] = m
        self._coefficients = cleaned

    def multiplicity(self, name: str) -> int:
        return self._coefficients.get(name, 0)

    def items(self) -> tuple[tuple[str, int], ...]:
        return tuple(sorted(self._coefficients.items()))

    def support(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.items())

    def as_dict(self) -> dict[str, int]:
        return dict(self._coefficients)

    def __bool__(self) -> bool:
        return bool(self._coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self.items())

    def __add__(self, other: "Divisor") -> "Divisor":
        merged = dict(self._coefficients)
        for name, m in other._coefficients.items():
            merged[name] = merged.get(name, 0) + m
        return Divisor(merged)

    def __neg__(self) -> "Divisor":
        return Divisor({name: -m for name, m in self._coefficients.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __repr__(self) -> str:
        return f"Divisor({self._coefficients!r})"

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        terms = []
        for name, m in self.items():
            if m == 1:
                terms.append(f"+ {name}")
            elif m == -1:
                terms.append(f"- {name}")
            else:
                terms.append(f"{'+' if m > 0 else '-'} {abs(m)}*{name}")
        joined = " ".join(terms)
        return joined[2:] if joined.startswith("+ ") else joined


def structure_class(lattice: WeightedLattice) -> KClass:
    """Class of the structure sheaf: the first basis vector."""
    return KClass(lattice, lattice.basis_vector(0))


def simple_class(lattice: WeightedLattice, point: str, orbit_index: int = 0) -> KClass:
    """Class of the simple sheaf tau^j S at a point.

    For a weighted point of weight p the orbit index j must lie in 0..p-1;
    the omitted member j = 0 expands to s0 minus the rest of the orbit.  For
    an ordinary point only j = 0 is allowed and the class is s0.
    """
    weight = lattice.spec.weight(point)
    if weight is None:
        if orbit_index != 0:
            raise ValueError(f"ordinary point {point!r} has a single simple class (index 0)")
        return KClass(lattice, lattice.basis_vector(1))
    if not 0 <= orbit_index < weight:
        raise ValueError(f"orbit index {orbit_index} out of range for weight {weight}")
    if orbit_index == 0:
        coords = list(lattice.basis_vector(1))
        for column in lattice.tube_columns(point):
            coords[column] -= 1
        return KClass(lattice, tuple(coords))
    return KClass(lattice, lattice.basis_vector(lattice.tube_columns(point)[orbit_index - 1]))


def orbit_classes(lattice: WeightedLattice, point: str) -> tuple[KClass, ...]:
    """The full tau-orbit of simple classes at a point ({s0} when ordinary)."""
    weight = lattice.spec.weight(point)
    if weight is None:
        return (simple_class(lattice, point),)
    return tuple(simple_class(lattice, point, j) for j in range(weight))


def shift_matrix(lattice: WeightedLattice, point: str) -> IntMatrix:
    """Matrix of the point shift u -> u - sum over the orbit of <c, u> c."""
    orbit = orbit_classes(lattice, point)
    n = lattice.rank
    gram_t = lattice.gram.transpose()
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for cls in orbit:
        coords = cls.coordinates
        # Row vector of the pairing <c, -> against basis vectors.
        pairing = gram_t.apply(coords)
        for i in range(n):
            ci = coords[i]
            if ci:
                row = rows[i]
                for j in range(n):
                    row[j] -= ci * pairing[j]
    return IntMatrix(rows)


def inverse_shift_matrix(lattice: WeightedLattice, point: str) -> IntMatrix:
    """Exact inverse of the shift matrix (shifts are unimodular isometries)."""
    inverse = rational_inverse(shift_matrix(lattice, point))
    rows = []
    for row in inverse:
        assert all(value.denominator == 1 for value in row), "shift inverse must be integral"
        rows.append(tuple(int(value) for value in row))
    return IntMatrix(rows)


def point_shift(lattice: WeightedLattice, u: KClass | Sequence[int], point: str) -> KClass:
    """Apply the shift at one point to a class (total on the whole lattice)."""
    coords = tuple(u)
    return KClass(lattice, shift_matrix(lattice, point).apply(coords))


def line_bundle_class(lattice: WeightedLattice, divisor: Divisor) -> KClass:
    """Class of the line bundle obtained by shifting the structure sheaf by a divisor.

    Positive multiplicities apply the shift, negative ones its inverse;
    shifts at distinct points commute so the order is immaterial.
    """
    coords = lattice.basis_vector(0)
    for name, multiplicity in divisor.items():
        matrix = shift_matrix(lattice, name) if multiplicity > 0 else inverse_shift_matrix(lattice, name)
        for _ in range(abs(multiplicity)):
            coords = matrix.apply(coords)
    return KClass(lattice, coords)


def rank_degree(lattice: WeightedLattice, u: KClass | Sequence[int]) -> tuple[int, int]:
    """Weighted rank and degree of a class."""
    coords = tuple(u)
    return lattice.weighted_rank(coords), lattice.weighted_degree(coords)
