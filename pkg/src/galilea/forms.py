"""Bilinear forms g(x, y) = x^T G y on R^{n+1}, time coordinate last."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import (
    DimensionError,
    Matrix,
    ParseError,
    SingularMatrixError,
    as_rational,
    inverse,
    matrix_from_json,
    nullspace,
    rank,
    rational_parse,
)

FourVector = tuple[Fraction, ...]


def four_vector(values: Sequence) -> FourVector:
    return tuple(as_rational(x) for x in values)


class FormHypothesisError(ValueError):
    """The form lacks a property an operation requires (symmetry, invertibility)."""


@dataclass(frozen=True)
class BilinearForm:
    gram: Matrix

    def __post_init__(self):
        if not self.gram.is_square():
            raise DimensionError("a Gram matrix must be square")

    @property
    def dimension(self) -> int:
        return self.gram.rows

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        return evaluate(self, x, y)


@dataclass(frozen=True)
class GalileanParameters:
    """The boost-invariant vector (a, a0) labelling a Galilean form."""

    a: tuple[Fraction, ...]
    a0: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(as_rational(x) for x in self.a))
        object.__setattr__(self, "a0", as_rational(self.a0))

    @property
    def n(self) -> int:
        return len(self.a)

    def norm2(self) -> Fraction:
        return sum((x * x for x in self.a), Fraction(0))


def galilean_form(p: GalileanParameters, n: int | None = None) -> BilinearForm:
    """G[i, t] = a_i, G[t, i] = -a_i, G[t, t] = a0.

    So g(x, y) = a . (t_y x - t_x y) + a0 t_x t_y.
    """
    if n is None:
        n = p.n
    if n < 1 or p.n != n:
        raise DimensionError(f"need {n} spatial components, got {p.n}")
    d = n + 1
    rows = [[Fraction(0)] * d for _ in range(d)]
    for i, ai in enumerate(p.a):
        rows[i][n] = ai
        rows[n][i] = -ai
    rows[n][n] = p.a0
    return BilinearForm(Matrix.from_rows(rows))


def evaluate(g: BilinearForm, x: Sequence, y: Sequence) -> Fraction:
    d = g.dimension
    if len(x) != d or len(y) != d:
        raise DimensionError(f"vectors must have {d} components")
    x = four_vector(x)
    y = four_vector(y)
    G = g.gram
    return sum(
        (x[i] * G[i, j] * y[j] for i in range(d) if x[i] for j in range(d) if y[j]),
        Fraction(0),
    )


def split(g: BilinearForm) -> tuple[BilinearForm, BilinearForm]:
    """(G + G^T)/2 and (G - G^T)/2."""
    G = g.gram
    half = Fraction(1, 2)
    return BilinearForm((G + G.T) * half), BilinearForm((G - G.T) * half)


@dataclass(frozen=True)
class RankReport:
    rank: int
    nondegenerate: bool
    radical_basis: tuple[FourVector, ...]


def rank_report(g: BilinearForm) -> RankReport:
    # g(x, y) = 0 for all y  <=>  G^T x = 0
    r = rank(g.gram)
    radical = tuple(v.entries for v in nullspace(g.gram.T))
    return RankReport(r, r == g.dimension, radical)


def adjoint(a: Matrix, g: BilinearForm) -> Matrix:
    """A* = G^-1 A^T G, defined only for symmetric invertible G."""
    G = g.gram
    if a.shape != G.shape:
        raise DimensionError("operator and form dimensions differ")
    if not G.is_symmetric():
        raise FormHypothesisError("adjoint requires a symmetric form")
    try:
        g_inv = inverse(G)
    except SingularMatrixError as exc:
        raise FormHypothesisError(f"adjoint requires a nondegenerate form ({exc})") from None
    return g_inv @ a.T @ G


def is_isometry(a: Matrix, g: BilinearForm) -> bool:
    G = g.gram
    if a.shape != G.shape:
        raise DimensionError("operator and form dimensions differ")
    return a.T @ G @ a == G


def preserves_quadratic_form(a: Matrix, g: BilinearForm) -> bool:
    """q(Ax) = q(x) for every basis vector e_i and every sum e_i + e_j.

    For symmetric g this is equivalent to A being an isometry (polarization).
    """
    d = g.dimension
    basis = [tuple(Fraction(int(i == k)) for k in range(d)) for i in range(d)]
    probes = basis + [
        tuple(x + y for x, y in zip(basis[i], basis[j])) for i in range(d) for j in range(i + 1, d)
    ]
    for x in probes:
        ax = apply(a, x)
        if evaluate(g, ax, ax) != evaluate(g, x, x):
            return False
    return True


def translation_defect(
    p: GalileanParameters, shift: Sequence, x: Sequence, y: Sequence
) -> Fraction:
    """g(x + s, y + s) - g(x, y) for the Galilean form labelled by p."""
    g = galilean_form(p)
    d = g.dimension
    if not (len(shift) == len(x) == len(y) == d):
        raise DimensionError(f"all vectors must have {d} components")
    s = four_vector(shift)
    xs = tuple(a + b for a, b in zip(four_vector(x), s))
    ys = tuple(a + b for a, b in zip(four_vector(y), s))
    return evaluate(g, xs, ys) - evaluate(g, x, y)


def four_velocity(v: Sequence) -> FourVector:
    return four_vector(list(v) + [1])


def four_momentum(m, v: Sequence) -> FourVector:
    m = as_rational(m)
    return tuple(m * c for c in four_velocity(v))


def apply(a: Matrix, x: Sequence) -> FourVector:
    return (a @ Matrix.column(x)).entries


# -- form file format -----------------------------------------------------

def load_form(doc) -> BilinearForm:
    """Read ``{"dimension", "gram"}`` or the ``{"galilean": {...}}`` shorthand."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise ParseError("form document must be a JSON object")
    if "galilean" in doc:
        params = doc["galilean"]
        try:
            n = params["n"]
            a = [rational_parse(str(x)) for x in params["a"]]
            a0 = rational_parse(str(params.get("a0", "0")))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"galilean shorthand missing field: {exc}") from None
        if not isinstance(n, int) or n < 1 or len(a) != n:
            raise ParseError(f"galilean shorthand needs n >= 1 and {n!r} components in 'a'")
        return galilean_form(GalileanParameters(tuple(a), a0), n)
    try:
        d = doc["dimension"]
        gram = matrix_from_json(doc["gram"])
    except KeyError as exc:
        raise ParseError(f"form document missing field {exc}") from None
    if gram.shape != (d, d):
        raise ParseError(f"gram is {gram.rows}x{gram.cols}, dimension says {d}")
    return BilinearForm(gram)
