"""Transformation families acting on R^{n+1} with time as the last coordinate.

Three kinds of generator exist:

* :class:`ExplicitElement`: one concrete matrix A.
* :class:`ParametricElement`: a matrix of polynomials in parameters; it
  stands for every matrix obtained by substituting rational values.
* :class:`AlgebraElement`: an infinitesimal generator X (Lie algebra level).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exact import DimensionError, Matrix, ParseError, as_rational, inverse, matrix_from_json
from .poly import PolyMatrix, Polynomial, parameter_variables


@dataclass(frozen=True)
class ExplicitElement:
    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square():
            raise DimensionError("generator matrices must be square")

    @property
    def dimension(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class AlgebraElement:
    matrix: Matrix

    def __post_init__(self):
        if not self.matrix.is_square():
            raise DimensionError("generator matrices must be square")

    @property
    def dimension(self) -> int:
        return self.matrix.rows


@dataclass(frozen=True)
class ParametricElement:
    matrix: PolyMatrix

    def __post_init__(self):
        m = self.matrix
        if m.rows != m.cols:
            raise DimensionError("generator matrices must be square")
        if m.evaluate([0] * self.parameter_count) != Matrix.identity(m.rows):
            raise ValueError("a parametric family must be the identity at zero parameters")

    @property
    def dimension(self) -> int:
        return self.matrix.rows

    @property
    def parameters(self) -> tuple[str, ...]:
        return self.matrix.variables

    @property
    def parameter_count(self) -> int:
        return len(self.matrix.variables)

    def at(self, values: Sequence) -> Matrix:
        return self.matrix.evaluate(values)


GeneratorFamily = Union[ExplicitElement, ParametricElement, AlgebraElement]


def boost_family(n: int) -> ParametricElement:
    """(x, t) -> (x + v t, t) as a matrix over the parameters v1..vn."""
    if n < 1:
        raise ValueError("need at least one spatial dimension")
    d = n + 1
    params = parameter_variables(n)
    zero = Polynomial.zero(params)
    one = Polynomial.constant(1, params)
    rows = [[one if i == j else zero for j in range(d)] for i in range(d)]
    for i, v in enumerate(Polynomial.gens(params)):
        rows[i][n] = v
    return ParametricElement(PolyMatrix.from_rows(rows))


def boost(v: Sequence) -> Matrix:
    v = [as_rational(x) for x in v]
    return boost_family(len(v)).at(v)


def boost_algebra_generators(n: int) -> list[AlgebraElement]:
    if n < 1:
        raise ValueError("need at least one spatial dimension")
    return [AlgebraElement(Matrix.elementary(n + 1, i, n)) for i in range(n)]


def rotation_algebra_generators(n: int) -> list[AlgebraElement]:
    """J_ij = E_ij - E_ji for spatial i < j; time row and column stay zero."""
    if n < 1:
        raise ValueError("need at least one spatial dimension")
    d = n + 1
    return [
        AlgebraElement(Matrix.elementary(d, i, j) - Matrix.elementary(d, j, i))
        for i in range(n)
        for j in range(i + 1, n)
    ]


def embed_spatial(r: Matrix) -> Matrix:
    """Block-diagonal diag(R, 1): acts on space, leaves time alone."""
    n = r.rows
    rows = [list(r.row_at(i)) + [Fraction(0)] for i in range(n)]
    rows.append([Fraction(0)] * n + [Fraction(1)])
    return Matrix.from_rows(rows)


def cayley_rotation(s: Matrix) -> Matrix:
    """Exact rational rotation (I - S)^-1 (I + S) of space, as a (n+1)x(n+1) matrix."""
    if not s.is_antisymmetric():
        raise ValueError("Cayley transform needs an antisymmetric matrix")
    eye = Matrix.identity(s.rows)
    return embed_spatial(inverse(eye - s) @ (eye + s))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


# -- generator file format ------------------------------------------------

def load_generators(doc, algebra: bool = False) -> tuple[int, list[GeneratorFamily]]:
    """Parse the generator JSON document into (dimension, families).

    ``{"kind": "boosts"}`` expands to the parametric boost family, or to the
    boost algebra generators when ``algebra`` is set; ``{"kind": "rotations"}``
    expands to the rotation algebra generators.
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict) or "dimension" not in doc:
        raise ParseError("generator document needs a 'dimension' field")
    d = doc["dimension"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise ParseError(f"dimension must be an integer >= 2, got {d!r}")
    n = d - 1
    families: list[GeneratorFamily] = []
    for k, gen in enumerate(doc.get("generators", [])):
        kind = gen.get("kind") if isinstance(gen, dict) else None
        if kind == "boosts":
            families.extend(boost_algebra_generators(n) if algebra else [boost_family(n)])
        elif kind == "rotations":
            families.extend(rotation_algebra_generators(n))
        elif kind in ("explicit", "algebra"):
            if "matrix" not in gen:
                raise ParseError(f"generator {k} ({kind}) has no 'matrix'")
            m = matrix_from_json(gen["matrix"])
            if m.shape != (d, d):
                raise ParseError(f"generator {k} is {m.rows}x{m.cols}, expected {d}x{d}")
            families.append(ExplicitElement(m) if kind == "explicit" else AlgebraElement(m))
        else:
            raise ParseError(f"generator {k} has unknown kind {kind!r}")
    return d, families
