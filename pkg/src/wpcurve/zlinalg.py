"""Exact linear algebra over the integers, plus integer polynomials.

Everything here is exact: matrices hold arbitrary-precision Python ints,
rational results are ``fractions.Fraction``, and there is no floating point
anywhere.  The module provides the workhorses the rest of the package is
built on: Smith normal form with unimodular multipliers, characteristic
polynomials (division-free), exact rational inversion, and the polynomials
``v_n = 1 + x + ... + x^(n-1)``.
"""

from __future__ import annotations

from fractions import Fraction
from operator import index as _as_int
from operator import mul
from typing import Iterable, Iterator, Sequence


class IntMatrix:
    """Immutable dense matrix with integer entries.

    Entries are validated to be true integers (floats are rejected), stored
    row-major as a tuple of tuples.  All operations return new matrices.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Iterable[Iterable[int]], cols: int | None = None):
        entries = tuple(tuple(_as_int(x) for x in row) for row in data)
        widths = {len(row) for row in entries}
        if len(widths) > 1:
            raise ValueError("rows have unequal lengths")
        if widths:
            ncols = widths.pop()
        elif cols is not None:
            ncols = cols
        else:
            ncols = 0
        if cols is not None and cols != ncols:
            raise ValueError(f"expected {cols} columns, got {ncols}")
        self.entries = entries
        self.rows = len(entries)
        self.cols = ncols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(((0,) * cols for _ in range(rows)), cols=cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(row) for row in self.entries]!r})"

    def __str__(self) -> str:
        if not self.entries:
            return f"<empty {self.rows}x{self.cols}>"
        width = max((len(str(x)) for row in self.entries for x in row), default=1)
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in self.entries)

    def transpose(self) -> "IntMatrix":
        if self.rows == 0:
            return IntMatrix(((),) * self.cols, cols=0)
        return IntMatrix(zip(*self.entries), cols=self.rows)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix((tuple(-x for x in row) for row in self.entries), cols=self.cols)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            (tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            cols=self.cols,
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            (tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)),
            cols=self.cols,
        )

    def __rmul__(self, scalar: int) -> "IntMatrix":
        k = _as_int(scalar)
        return IntMatrix((tuple(k * x for x in row) for row in self.entries), cols=self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if other.rows:
            cols_of_other = tuple(zip(*other.entries))
        else:
            cols_of_other = ((),) * other.cols
        return IntMatrix(
            (tuple(sum(map(mul, row, col)) for col in cols_of_other) for row in self.entries),
            cols=other.cols,
        )

    def __pow__(self, exponent: int) -> "IntMatrix":
        n = _as_int(exponent)
        if n < 0:
            raise ValueError("negative matrix powers are not supported; invert first")
        if not self.is_square:
            raise ValueError("matrix power requires a square matrix")
        result = IntMatrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base if n > 1 else base
            n >>= 1
        return result

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} does not match {self.cols} columns")
        return tuple(sum(map(mul, row, vector)) for row in self.entries)

    def trace(self) -> int:
        if not self.is_square:
            raise ValueError("trace requires a square matrix")
        return sum(self.entries[i][i] for i in range(self.rows))

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    """Integer dot product; lengths must agree."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(map(mul, u, v))


class IntPoly:
    """Univariate integer polynomial, coefficients in ascending degree order.

    The zero polynomial has an empty coefficient tuple; otherwise the leading
    coefficient is nonzero.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [_as_int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coefficients) - 1

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coefficients)

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = self._coerce(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        summed = list(a)
        for i, c in enumerate(b):
            summed[i] += c
        return IntPoly(summed)

    __radd__ = __add__

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        other = self._coerce(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPoly()
        prod = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci:
                for j, cj in enumerate(b):
                    prod[i + j] += ci * cj
        return IntPoly(prod)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly":
        n = _as_int(exponent)
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = IntPoly((1,))
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, value):
        """Evaluate by Horner's rule; works for ints and Fractions alike."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coefficients)!r})"

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for exp in range(self.degree, -1, -1):
            c = self.coefficients[exp]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            else:
                x = "x" if exp == 1 else f"x^{exp}"
                body = x if mag == 1 else f"{mag}*{x}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    @staticmethod
    def _coerce(value: "IntPoly | int") -> "IntPoly":
        if isinstance(value, IntPoly):
            return value
        return IntPoly((_as_int(value),))


def v_poly(n: int) -> IntPoly:
    """The polynomial 1 + x + ... + x^(n-1), i.e. (x^n - 1)/(x - 1)."""
    n = _as_int(n)
    if n < 1:
        raise ValueError(f"v_poly is defined for n >= 1, got {n}")
    return IntPoly((1,) * n)


def char_poly(matrix: IntMatrix) -> IntPoly:
    """Characteristic polynomial det(xI - M), monic of degree = size.

    Uses the Faddeev-LeVerrier recursion in pure integer arithmetic; every
    intermediate trace division is checked to be exact, so a non-integral
    result is impossible rather than silently wrong.
    """
    if not matrix.is_square:
        raise ValueError("characteristic polynomial requires a square matrix")
    n = matrix.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    acc = IntMatrix.identity(n)
    for k in range(1, n + 1):
        acc = matrix @ acc
        quotient, remainder = divmod(-acc.trace(), k)
        if remainder:
            raise ArithmeticError("non-integral coefficient in characteristic polynomial recursion")
        coeffs[n - k] = quotient
        if k < n:
            acc = acc + quotient * IntMatrix.identity(n)
    return IntPoly(coeffs)


def smith_normal_form(matrix: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with multipliers: returns (U, D, V) with D = U @ M @ V.

    U and V are unimodular, D is diagonal with nonnegative entries satisfying
    the divisibility chain d1 | d2 | ... .  Total on every integer matrix.
    """
    nrows, ncols = matrix.rows, matrix.cols
    a = [list(row) for row in matrix.entries]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src: int, dst: int, k: int) -> None:
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src: int, dst: int, k: int) -> None:
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(nrows, ncols)):
        # Pivot selection: smallest nonzero magnitude keeps coefficients tame.
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                x = a[i][j]
                if x and (pivot is None or abs(x) < pivot[0]):
                    pivot = (abs(x), i, j)
        if pivot is None:
            break
        if pivot[1] != t:
            swap_rows(t, pivot[1])
        if pivot[2] != t:
            swap_cols(t, pivot[2])

        while True:
            clean = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        add_row(t, i, -q)
                    if a[i][t]:
                        # Remainder is strictly smaller than the pivot; promote it.
                        swap_rows(t, i)
                        clean = False
            if not clean:
                continue
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        clean = False
            if not clean:
                continue
            # Divisibility chain: the pivot must divide the rest of the block.
            p = a[t][t]
            offender = None
            for i in range(t + 1, nrows):
                row = a[i]
                if any(row[j] % p for j in range(t + 1, ncols)):
                    offender = i
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return (
        IntMatrix(u, cols=nrows),
        IntMatrix(a, cols=ncols),
        IntMatrix(v, cols=ncols),
    )


def rational_inverse(matrix: IntMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse over the rationals via Gauss-Jordan elimination.

    Raises ValueError on non-square or singular input.
    """
    if not matrix.is_square:
        raise ValueError("only square matrices can be inverted")
    n = matrix.rows
    aug = [
        [Fraction(matrix.entries[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        inv_pivot = 1 / aug[col][col]
        aug[col] = [x * inv_pivot for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rational_product(
    left: Sequence[Sequence], right: Sequence[Sequence]
) -> tuple[tuple[Fraction, ...], ...]:
    """Product of two matrices given as nested sequences of ints/Fractions."""
    if left and right and len(left[0]) != len(right):
        raise ValueError("inner dimensions do not match")
    cols = tuple(zip(*right))
    return tuple(
        tuple(Fraction(sum(map(mul, row, col))) for col in cols) for row in left
    )
