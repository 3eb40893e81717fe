"""Seeded random instances shared by the claim registry, scripts and tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import Matrix, SingularMatrixError, inverse, random_rational, rank
from .forms import GalileanParameters


def random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 4) -> Matrix:
    return Matrix(rows, cols, tuple(random_rational(rng, bound) for _ in range(rows * cols)))


def random_vector(rng: random.Random, n: int, nonzero: bool = False, bound: int = 5) -> tuple[Fraction, ...]:
    while True:
        v = tuple(random_rational(rng, bound) for _ in range(n))
        if any(v) or not nonzero:
            return v


def random_antisymmetric(rng: random.Random, n: int) -> Matrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = random_rational(rng)
            rows[i][j], rows[j][i] = x, -x
    return Matrix.from_rows(rows)


def random_symmetric_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = random_matrix(rng, n, n)
        s = m + m.T
        if rank(s) == n:
            return s


def random_form_isometry(rng: random.Random, g: Matrix) -> Matrix:
    """A = (I - K)^-1 (I + K) with K = G^-1 S, S antisymmetric: A^T G A = G."""
    n = g.rows
    g_inv = inverse(g)
    eye = Matrix.identity(n)
    while True:
        k = g_inv @ random_antisymmetric(rng, n)
        try:
            return inverse(eye - k) @ (eye + k)
        except SingularMatrixError:
            continue


def random_galilean_parameters(rng: random.Random, n: int) -> GalileanParameters:
    return GalileanParameters(random_vector(rng, n, nonzero=True), random_rational(rng))
