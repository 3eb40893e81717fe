"""Exact rational scalars and dense linear algebra over Q.

Scalars are :class:`fractions.Fraction`, which already keeps numerator and
denominator in lowest terms with a positive denominator. Everything here is
deterministic: elimination always picks the first nonzero entry in the
leftmost remaining column, never the largest one.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


class ParseError(ValueError):
    """Malformed textual input; ``position`` is a 0-based offset when known."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    def __init__(self, rank: int, size: int):
        super().__init__(f"matrix is singular: rank {rank} < {size}")
        self.rank = rank
        self.size = size


def rational_parse(text: str) -> Fraction:
    token = text.strip()
    if not _RATIONAL_RE.fullmatch(token):
        raise ParseError(f"malformed rational {token!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {token!r}")
    return Fraction(int(num), int(den) if den else 1)


def rational_format(r: Fraction) -> str:
    # Fraction.__str__ is canonical already: "1/2", "-3", never "2/4" or "5/1".
    return str(Fraction(r))


def as_rational(value) -> Fraction:
    if isinstance(value, str):
        return rational_parse(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction, int or string")
    return Fraction(value)


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        r = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
        if r or not nonzero:
            return r


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix of Fractions, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionError("a matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(as_rational(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Iterable) -> "Matrix":
        vals = tuple(as_rational(v) for v in values)
        return cls(len(vals), 1, vals)

    @classmethod
    def row(cls, values: Iterable) -> "Matrix":
        vals = tuple(as_rational(v) for v in values)
        return cls(1, len(vals), vals)

    @classmethod
    def elementary(cls, n: int, i: int, j: int) -> "Matrix":
        """E_ij: the n x n matrix with a single 1 at (i, j)."""
        e = [Fraction(0)] * (n * n)
        e[i * n + j] = Fraction(1)
        return cls(n, n, tuple(e))

    # -- access -----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {ij} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row_at(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col_at(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols]

    def vec(self) -> tuple[Fraction, ...]:
        """Row-major vectorization: index mu*cols + nu holds entry (mu, nu)."""
        return self.entries

    @classmethod
    def unvec(cls, values: Sequence, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(as_rational(v) for v in values))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_antisymmetric(self) -> bool:
        return self.is_square() and self == -self.T

    # -- arithmetic -------------------------------------------------------

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(
            self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)
        ))

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = as_rational(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        cells = [[rational_format(x) for x in r] for r in self.to_rows()]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.col_at(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row_at(i)
        for col in bcols:
            out.append(sum((x * y for x, y in zip(r, col) if x and y), Fraction(0)))
    return Matrix(a.rows, b.cols, tuple(out))


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise DimensionError("hstack needs equal row counts")
    return Matrix.from_rows([list(a.row_at(i)) + list(b.row_at(i)) for i in range(a.rows)])


def vstack(blocks: Sequence[Matrix]) -> Matrix:
    if not blocks:
        raise DimensionError("nothing to stack")
    cols = blocks[0].cols
    if any(m.cols != cols for m in blocks):
        raise DimensionError("vstack needs equal column counts")
    return Matrix(sum(m.rows for m in blocks), cols, tuple(x for m in blocks for x in m.entries))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    rows = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pr = next((i for i in range(r, m.rows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        piv_row = rows[r]
        for i in range(m.rows):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [x - f * y for x, y in zip(rows[i], piv_row)]
        pivots.append(c)
        r += 1
    return Matrix(m.rows, m.cols, tuple(x for row in rows for x in row)), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix) -> list[Matrix]:
    """Right-kernel basis as column vectors.

    Free variables are set to 1 one at a time, in increasing column order,
    and the basis is returned in that order.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -reduced[row, free]
        basis.append(Matrix(m.cols, 1, tuple(v)))
    return basis


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise DimensionError(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    reduced, pivots = rref(hstack(m, Matrix.identity(n)))
    r = sum(1 for p in pivots if p < n)
    if r < n:
        raise SingularMatrixError(r, n)
    return Matrix.from_rows([reduced.row_at(i)[n:] for i in range(n)])


def rank_factorization(m: Matrix) -> tuple[Matrix, Matrix]:
    """M = C @ F with C the pivot columns of M and F the nonzero rows of rref(M)."""
    reduced, pivots = rref(m)
    if not pivots:
        raise ValueError("zero matrix has no rank factorization")
    c = Matrix.from_rows([[m[i, p] for p in pivots] for i in range(m.rows)])
    f = Matrix.from_rows([reduced.row_at(i) for i in range(len(pivots))])
    return c, f


def pseudo_inverse(m: Matrix) -> Matrix:
    """Moore-Penrose pseudo-inverse, exact.

    Uses M+ = F^T (F F^T)^-1 (C^T C)^-1 C^T for the rank factorization M = C F.
    """
    if m.is_zero():
        return Matrix.zeros(m.cols, m.rows)
    c, f = rank_factorization(m)
    ct = c.T
    ft = f.T
    return ft @ inverse(f @ ft) @ inverse(ct @ c) @ ct


def penrose_conditions(m: Matrix, x: Matrix) -> dict[str, bool]:
    mx = m @ x
    xm = x @ m
    return {
        "MXM=M": mx @ m == m,
        "XMX=X": xm @ x == x,
        "(MX)^T=MX": mx.T == mx,
        "(XM)^T=XM": xm.T == xm,
    }


# -- JSON matrix format ---------------------------------------------------

def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[rational_format(x) for x in r] for r in m.to_rows()],
    }


def matrix_from_json(doc) -> Matrix:
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"matrix document missing field: {exc}") from None
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"expected {rows} rows of entries")
    parsed = []
    for i, r in enumerate(entries):
        if not isinstance(r, list) or len(r) != cols:
            raise ParseError(f"row {i} does not have {cols} entries")
        for x in r:
            if not isinstance(x, (str, int)) or isinstance(x, bool):
                raise ParseError(f"matrix entry {x!r} is not a rational string")
            parsed.append(rational_parse(str(x)))
    return Matrix(rows, cols, tuple(parsed))
