"""Solve for every bilinear form left invariant by a set of generators.

A form with Gram matrix G is preserved by A when A^T G A = G, and by an
infinitesimal generator X when X^T G + G X = 0. Both conditions are linear
in G. With ``vec`` the row-major flattening (index mu*d + nu holds G[mu, nu])
each becomes ``K @ vec(G) = 0`` and the invariant forms are the kernel of
the stacked K's.

Parametric families are handled symbolically: A^T G A - G is expanded as a
polynomial in the parameters and every coefficient is required to vanish,
which is the same as requiring invariance for all parameter values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import DimensionError, Matrix, nullspace, rank, rref, vstack
from .groups import AlgebraElement, ExplicitElement, GeneratorFamily, ParametricElement
from .poly import PolyMatrix, Polynomial, format_poly, poly_coefficient_map


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def group_constraint(a: Matrix, d: int) -> Matrix:
    """K with K[(mu,nu),(rho,sigma)] = A[rho,mu] A[sigma,nu] - delta delta."""
    if a.shape != (d, d):
        raise DimensionError(f"expected a {d}x{d} matrix, got {a.rows}x{a.cols}")
    out = []
    for mu in range(d):
        for nu in range(d):
            for rho in range(d):
                for sigma in range(d):
                    out.append(a[rho, mu] * a[sigma, nu] - _delta(rho, mu) * _delta(sigma, nu))
    return Matrix(d * d, d * d, tuple(out))


def algebra_constraint(x: Matrix, d: int) -> Matrix:
    """K with K @ vec(G) = vec(X^T G + G X)."""
    if x.shape != (d, d):
        raise DimensionError(f"expected a {d}x{d} matrix, got {x.rows}x{x.cols}")
    out = []
    for mu in range(d):
        for nu in range(d):
            for rho in range(d):
                for sigma in range(d):
                    out.append(
                        x[rho, mu] * _delta(sigma, nu) + _delta(rho, mu) * x[sigma, nu]
                    )
    return Matrix(d * d, d * d, tuple(out))


def _gram_variables(d: int) -> tuple[str, ...]:
    return tuple(f"g_{mu}_{nu}" for mu in range(d) for nu in range(d))


def parametric_constraint(family: ParametricElement) -> Matrix:
    """One linear equation in vec(G) per (entry position, parameter monomial).

    Rows are ordered by position (row-major) and then by the parameter
    monomial's exponent tuple. A family whose residual vanishes identically
    yields the d^2 x d^2 zero matrix.
    """
    d = family.dimension
    p = family.parameter_count
    params = family.parameters
    ring = params + _gram_variables(d)
    lam = family.matrix.with_variables(ring)
    gens = Polynomial.gens(ring)
    g = PolyMatrix(d, d, tuple(gens[p:]))
    residual = lam.T @ g @ lam - g

    rows: dict[tuple, list[Fraction]] = {}
    for pos, mono, coeff in poly_coefficient_map(residual):
        pmono, gmono = mono[:p], mono[p:]
        if sum(gmono) != 1:
            raise AssertionError("residual is not linear in the Gram entries")
        row = rows.setdefault((pos, pmono), [Fraction(0)] * (d * d))
        row[gmono.index(1)] += coeff
    if not rows:
        return Matrix.zeros(d * d, d * d)
    return Matrix.from_rows([rows[k] for k in sorted(rows)])


def constraint_for(family: GeneratorFamily) -> Matrix:
    d = family.dimension
    if isinstance(family, ExplicitElement):
        return group_constraint(family.matrix, d)
    if isinstance(family, AlgebraElement):
        return algebra_constraint(family.matrix, d)
    if isinstance(family, ParametricElement):
        return parametric_constraint(family)
    raise TypeError(f"not a generator family: {family!r}")


@dataclass(frozen=True)
class InvarianceProblem:
    dimension: int
    constraints: tuple[GeneratorFamily, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for fam in self.constraints:
            if fam.dimension != self.dimension:
                raise DimensionError(
                    f"generator of dimension {fam.dimension} in a dimension-{self.dimension} problem"
                )


@dataclass(frozen=True)
class FormBasis:
    """Canonical basis of the invariant-form space.

    The vectorized basis, stacked as rows, is in reduced row echelon form.
    """

    dimension: int
    basis: tuple[Matrix, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def span_matrix(self) -> Matrix:
        d = self.dimension
        if not self.basis:
            return Matrix.zeros(1, d * d)
        return Matrix.from_rows([b.vec() for b in self.basis])

    def contains(self, g: Matrix) -> bool:
        """True when g is a linear combination of the basis."""
        if g.is_zero():
            return True
        if not self.basis:
            return False
        span = self.span_matrix()
        return rank(vstack([span, Matrix.row(g.vec())])) == len(self.basis)


def stacked_constraints(problem: InvarianceProblem) -> Matrix:
    d = problem.dimension
    blocks = [constraint_for(f) for f in problem.constraints]
    if not blocks:
        return Matrix.zeros(1, d * d)
    return vstack(blocks)


def canonical_basis(vectors: Sequence[Sequence[Fraction]], d: int) -> FormBasis:
    if not vectors:
        return FormBasis(d, ())
    reduced, pivots = rref(Matrix.from_rows(vectors))
    return FormBasis(d, tuple(
        Matrix.unvec(reduced.row_at(i), d, d) for i in range(len(pivots))
    ))


def solve_invariant_forms(problem: InvarianceProblem) -> FormBasis:
    d = problem.dimension
    kernel = nullspace(stacked_constraints(problem))
    return canonical_basis([v.entries for v in kernel], d)


@dataclass(frozen=True)
class Violation:
    position: tuple[int, int]
    residual: str


@dataclass(frozen=True)
class InvarianceReport:
    violations: tuple[Violation, ...]

    @property
    def invariant(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.invariant


def _report_from_matrix(residual: Matrix) -> InvarianceReport:
    return InvarianceReport(tuple(
        Violation((i, j), str(residual[i, j]))
        for i in range(residual.rows)
        for j in range(residual.cols)
        if residual[i, j]
    ))


def verify_invariance(g: Matrix, family: GeneratorFamily) -> InvarianceReport:
    d = family.dimension
    if g.shape != (d, d):
        raise DimensionError(f"form is {g.rows}x{g.cols}, generator acts on dimension {d}")
    if isinstance(family, ExplicitElement):
        a = family.matrix
        return _report_from_matrix(a.T @ g @ a - g)
    if isinstance(family, AlgebraElement):
        x = family.matrix
        return _report_from_matrix(x.T @ g + g @ x)
    if isinstance(family, ParametricElement):
        lam = family.matrix
        gp = PolyMatrix.from_matrix(g, lam.variables)
        residual = lam.T @ gp @ lam - gp
        return InvarianceReport(tuple(
            Violation((i, j), format_poly(residual[i, j]))
            for i in range(d)
            for j in range(d)
            if residual[i, j]
        ))
    raise TypeError(f"not a generator family: {family!r}")
