"""Reduced Grothendieck group of a weighted smooth projective curve.

A curve of genus g with weighted points (x_i, p_i) has reduced Grothendieck
group of rank 2 + sum(p_i - 1): the rank-two group of the underlying curve,
extended by inserting a rank-(p_i - 1) tube block at the class of each
weighted simple sheaf.  The lattice carries the integral Euler form (Gram
matrix), the Coxeter transformation tau induced by the Auslander-Reiten
translation, and the tau-averaged Euler form from which the orbifold Euler
characteristic and weighted rank/degree are derived.

Basis convention, fixed as a public contract: index 0 is a (structure
class), index 1 is s0 (ordinary simple class), then one block per weighted
point in input order holding tau^1 s_i, ..., tau^(p_i - 1) s_i.  The omitted
orbit member tau^0 s_i equals s0 minus the block sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .zlinalg import IntMatrix, IntPoly, char_poly, dot, v_poly


@dataclass(frozen=True)
class WeightedCurveSpec:
    """Genus plus an ordered list of (point name, weight >= 2) pairs."""

    genus: int
    points: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be nonnegative, got {self.genus}")
        normalized = tuple((str(name), int(weight)) for name, weight in self.points)
        object.__setattr__(self, "points", normalized)
        names = [name for name, _ in normalized]
        if len(set(names)) != len(names):
            raise ValueError("weighted point names must be distinct")
        for name, weight in normalized:
            if not name:
                raise ValueError("point names must be nonempty")
            if weight < 2:
                raise ValueError(f"weights must be >= 2, got {weight} at {name!r}")

    @classmethod
    def from_weights(
        cls, genus: int, weights: Iterable[int], names: Sequence[str] | None = None
    ) -> "WeightedCurveSpec":
        """Build a spec from bare weights; weight-1 entries are dropped.

        Default point names are x1, x2, ... in input order (after dropping
        the trivial weights).
        """
        weights = [int(w) for w in weights]
        if any(w < 1 for w in weights):
            raise ValueError("weights must be positive integers")
        if names is not None:
            if len(names) != len(weights):
                raise ValueError("need exactly one name per weight")
            kept = [(n, w) for n, w in zip(names, weights) if w > 1]
        else:
            kept = [(f"x{i}", w) for i, w in enumerate((w for w in weights if w > 1), start=1)]
        return cls(genus, tuple(kept))

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.points)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.points)

    @property
    def pbar(self) -> int:
        """Least common multiple of the weights (1 when unweighted)."""
        return math.lcm(*self.weights) if self.points else 1

    def weight(self, name: str) -> int | None:
        """Weight of a named point, or None for an ordinary point."""
        for point_name, weight in self.points:
            if point_name == name:
                return weight
        return None

    def euler_characteristic(self) -> Fraction:
        """Orbifold Euler characteristic (2 - 2g) - sum(1 - 1/p_i)."""
        return Fraction(2 - 2 * self.genus) - sum(
            (1 - Fraction(1, p) for p in self.weights), start=Fraction(0)
        )


@dataclass(frozen=True)
class TubeLattice:
    """Rank-p bilinear group on a tau-orbit of period p.

    The pairing is <tau^i s, tau^j s> = 1 if j = i, -1 if j = i + 1 mod p,
    else 0; tau cycles the basis.  The orbit sum s0 pairs to zero with
    everything, so a bare tube is degenerate until attached to a curve.
    """

    period: int
    gram: IntMatrix
    tau: IntMatrix


def tube(period: int) -> TubeLattice:
    p = int(period)
    if p < 2:
        raise ValueError(f"tube period must be >= 2, got {p}")
    gram = IntMatrix(
        [[1 if j == i else -1 if j == (i + 1) % p else 0 for j in range(p)] for i in range(p)]
    )
    tau = IntMatrix([[1 if i == (j + 1) % p else 0 for j in range(p)] for i in range(p)])
    return TubeLattice(p, gram, tau)


class WeightedLattice:
    """Bilinear lattice of a weighted curve: Gram matrix plus Coxeter matrix.

    Instances are immutable after construction; obtain them via build().
    """

    def __init__(
        self,
        spec: WeightedCurveSpec,
        gram: IntMatrix,
        tau: IntMatrix,
        basis_labels: Sequence[str],
        tube_starts: dict[str, int],
    ):
        self.spec = spec
        self.gram = gram
        self.tau = tau
        self.rank = gram.rows
        self.basis_labels = tuple(basis_labels)
        self.pbar = spec.pbar
        self._tube_starts = dict(tube_starts)
        self._averaged_numerator: IntMatrix | None = None

    def __repr__(self) -> str:
        return f"WeightedLattice(genus={self.spec.genus}, weights={self.spec.weights})"

    def basis_vector(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.rank:
            raise ValueError(f"basis index {index} out of range for rank {self.rank}")
        return tuple(int(i == index) for i in range(self.rank))

    def tube_columns(self, name: str) -> range:
        """Column indices of the block tau^1 s, ..., tau^(p-1) s for a weighted point."""
        if name not in self._tube_starts:
            raise ValueError(f"{name!r} is not a weighted point of this curve")
        start = self._tube_starts[name]
        return range(start, start + self.spec.weight(name) - 1)

    def _check_width(self, vector: Sequence[int]) -> None:
        if len(vector) != self.rank:
            raise ValueError(f"coordinate width {len(vector)} does not match lattice rank {self.rank}")

    def euler_form(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Integral Euler pairing u^T Gram v."""
        self._check_width(u)
        self._check_width(v)
        return dot(tuple(u), self.gram.apply(tuple(v)))

    def _averaged_num(self) -> IntMatrix:
        # (sum of tau^j for j < pbar)^T @ Gram; entry (i, j) is pbar * <<e_i, e_j>>.
        if self._averaged_numerator is None:
            power = IntMatrix.identity(self.rank)
            total = power
            for _ in range(self.pbar - 1):
                power = self.tau @ power
                total = total + power
            self._averaged_numerator = total.transpose() @ self.gram
        return self._averaged_numerator

    def averaged_euler_form(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        """Average (1/pbar) * sum over j < pbar of <tau^j u, v>."""
        self._check_width(u)
        self._check_width(v)
        return Fraction(dot(tuple(u), self._averaged_num().apply(tuple(v))), self.pbar)

    def orbifold_euler_char(self) -> Fraction:
        """Orbifold Euler characteristic computed through the lattice.

        Averaging the self-pairing of the structure class over a full tau
        period yields pbar times the Euler characteristic (the orbit sum of
        a at a point of weight p walks the tube p/pbar times as slowly as
        tau), so the average is rescaled by 1/pbar here.  The result is
        checked against the genus/weight arithmetic before returning.
        """
        a = self.basis_vector(0)
        chi = 2 * self.averaged_euler_form(a, a) / self.pbar
        assert chi == self.spec.euler_characteristic(), "lattice Euler characteristic mismatch"
        return chi

    def delta(self) -> Fraction:
        """sum(1 - 1/p_i) - (2 - 2g); the negative of the Euler characteristic."""
        return sum(
            (1 - Fraction(1, p) for p in self.spec.weights), start=Fraction(0)
        ) - (2 - 2 * self.spec.genus)

    def weighted_rank(self, u: Sequence[int]) -> int:
        """Averaged pairing against the ordinary simple class; always an integer."""
        value = self.averaged_euler_form(u, self.basis_vector(1))
        assert value.denominator == 1, "weighted rank must be integral"
        return int(value)

    def weighted_degree(self, u: Sequence[int]) -> int:
        """pbar * (<<a, u>> - <<a, a>> rank(u)); normalized to be an integer."""
        a = self.basis_vector(0)
        value = self.pbar * (
            self.averaged_euler_form(a, u)
            - self.averaged_euler_form(a, a) * self.weighted_rank(u)
        )
        assert value.denominator == 1, "weighted degree must be integral"
        return int(value)

    def riemann_roch(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        """<<a,a>> rk(u) rk(v) + (1/pbar) |rk dg determinant|-form.

        Evaluates the weighted Riemann-Roch expression from rank and degree
        alone; agreement with averaged_euler_form is a theorem, exercised by
        the test suite rather than assumed here.
        """
        a = self.basis_vector(0)
        ru, rv = self.weighted_rank(u), self.weighted_rank(v)
        du, dv = self.weighted_degree(u), self.weighted_degree(v)
        return self.averaged_euler_form(a, a) * ru * rv + Fraction(ru * dv - rv * du, self.pbar)

    def coxeter_polynomial(self) -> IntPoly:
        """Characteristic polynomial of tau; factors as (x-1)^2 * prod v_{p_i}."""
        poly = char_poly(self.tau)
        expected = IntPoly((-1, 1)) ** 2
        for p in self.spec.weights:
            expected = expected * v_poly(p)
        assert poly == expected, "Coxeter polynomial does not match its tube factorization"
        return poly


def build(spec: WeightedCurveSpec) -> WeightedLattice:
    """Assemble the weighted lattice by attaching one tube per weighted point.

    Gram blocks: the genus block on (a, s0); <a, tau^j s_i> = 1 exactly for
    j = 1 (the distinguished simple with a section); tube self-pairings
    restricted to the kept orbit members; everything else orthogonal.
    tau fixes s0, rotates each tube (re-expressing tau^p s = tau^0 s through
    the orbit relation), and moves a by the weighted-point corrections.
    """
    genus = spec.genus
    points = spec.points
    count = len(points)
    rank = 2 + sum(p - 1 for _, p in points)

    labels = ["a", "s0"]
    starts: dict[str, int] = {}
    column = 2
    for name, p in points:
        starts[name] = column
        labels.extend(f"{name}[{j}]" for j in range(1, p))
        column += p - 1

    gram = [[0] * rank for _ in range(rank)]
    gram[0][0] = 1 - genus
    gram[0][1] = 1
    gram[1][0] = -1
    for name, p in points:
        start = starts[name]
        gram[0][start] = 1
        for j in range(1, p):
            c = start + j - 1
            gram[c][c] = 1
            if j + 1 < p:
                gram[c][c + 1] = -1

    tau = [[0] * rank for _ in range(rank)]
    tau[0][0] = 1
    tau[1][0] = count - (2 - 2 * genus)
    tau[1][1] = 1
    for name, p in points:
        start = starts[name]
        tau[start][0] = -1
        for j in range(1, p):
            c = start + j - 1
            if j + 1 < p:
                tau[c + 1][c] = 1
            else:
                tau[1][c] = 1
                for k in range(p - 1):
                    tau[start + k][c] -= 1

    return WeightedLattice(spec, IntMatrix(gram), IntMatrix(tau), labels, starts)
