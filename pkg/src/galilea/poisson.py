"""Constant Poisson structures built from antisymmetric bilinear forms.

The bivector is ``kappa * pinv(G)`` for an antisymmetric Gram matrix G.
The Moore-Penrose pseudo-inverse stands in for the inverse because the
Galilean antisymmetric block has rank 2 whenever n >= 2. On that block it
gives [[0, -a/|a|^2], [a^T/|a|^2, 0]]. With the default kappa = 1/4,

    {f, g} = sum_{mu,nu} pi^{mu nu} d_mu f d_nu g
           = a/(4|a|^2) . (d_t f grad g - d_t g grad f).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import DimensionError, Matrix, as_rational, pseudo_inverse
from .forms import BilinearForm, GalileanParameters, galilean_form, split
from .poly import Polynomial, observable_variables, partial

DEFAULT_KAPPA = Fraction(1, 4)


@dataclass(frozen=True)
class PoissonStructure:
    bivector: Matrix
    kappa: Fraction = DEFAULT_KAPPA

    def __post_init__(self):
        if not self.bivector.is_antisymmetric():
            raise ValueError("a Poisson bivector must be antisymmetric")

    @property
    def dimension(self) -> int:
        return self.bivector.rows

    def __call__(self, f: Polynomial, g: Polynomial) -> Polynomial:
        return bracket(self, f, g)


@dataclass(frozen=True)
class PolyVectorField:
    """components[mu] is the coefficient of d/dx^mu."""

    components: tuple[Polynomial, ...]

    def __post_init__(self):
        vs = {c.variables for c in self.components}
        if len(vs) > 1:
            raise DimensionError("vector field components live in different rings")

    def apply(self, g: Polynomial) -> Polynomial:
        out = Polynomial.zero(g.variables)
        for mu, c in enumerate(self.components):
            if c:
                out = out + c * partial(g, mu)
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)


def structure_from_form(g_antisym: BilinearForm, kappa=DEFAULT_KAPPA) -> PoissonStructure:
    G = g_antisym.gram
    if not G.is_antisymmetric():
        raise ValueError("structure_from_form needs an exactly antisymmetric form")
    if G.is_zero():
        raise ValueError("the zero form carries no Poisson structure")
    kappa = as_rational(kappa)
    return PoissonStructure(pseudo_inverse(G) * kappa, kappa)


def galilean_structure(p: GalileanParameters, kappa=DEFAULT_KAPPA) -> PoissonStructure:
    return structure_from_form(split(galilean_form(p))[1], kappa)


def _check_ring(s: PoissonStructure, *polys: Polynomial):
    for f in polys:
        if len(f.variables) != s.dimension:
            raise DimensionError(
                f"observable ring {f.variables} does not match a {s.dimension}-dimensional structure"
            )
    if len({f.variables for f in polys}) > 1:
        raise DimensionError("observables live in different rings")


def bracket(s: PoissonStructure, f: Polynomial, g: Polynomial) -> Polynomial:
    _check_ring(s, f, g)
    d = s.dimension
    df = [partial(f, mu) for mu in range(d)]
    dg = [partial(g, nu) for nu in range(d)]
    out = Polynomial.zero(f.variables)
    for mu in range(d):
        if not df[mu]:
            continue
        for nu in range(d):
            pi = s.bivector[mu, nu]
            if pi and dg[nu]:
                out = out + df[mu] * dg[nu] * pi
    return out


def hamiltonian_field(s: PoissonStructure, f: Polynomial) -> PolyVectorField:
    """X_f with X_f(g) = {f, g}: component nu is sum_mu pi^{mu nu} d_mu f."""
    _check_ring(s, f)
    d = s.dimension
    df = [partial(f, mu) for mu in range(d)]
    comps = []
    for nu in range(d):
        c = Polynomial.zero(f.variables)
        for mu in range(d):
            if s.bivector[mu, nu] and df[mu]:
                c = c + df[mu] * s.bivector[mu, nu]
        comps.append(c)
    return PolyVectorField(tuple(comps))


def jacobi_defect(s: PoissonStructure, f: Polynomial, g: Polynomial, h: Polynomial) -> Polynomial:
    _check_ring(s, f, g, h)
    return bracket(s, f, bracket(s, g, h)) + bracket(s, g, bracket(s, h, f)) + bracket(s, h, bracket(s, f, g))


def leibniz_defect(s: PoissonStructure, f: Polynomial, g: Polynomial, h: Polynomial) -> Polynomial:
    """{f, g h} - g {f, h} - {f, g} h."""
    _check_ring(s, f, g, h)
    return bracket(s, f, g * h) - g * bracket(s, f, h) - bracket(s, f, g) * h


def galilean_bracket_closed_form(p: GalileanParameters, f: Polynomial, g: Polynomial) -> Polynomial:
    """a/(4|a|^2) . (d_t f grad g - d_t g grad f), computed straight from (a, a0)."""
    n = p.n
    if f.variables != observable_variables(n) or g.variables != f.variables:
        raise DimensionError(f"expected observables over {observable_variables(n)}")
    norm2 = p.norm2()
    if not norm2:
        raise ValueError("closed form needs a nonzero spatial vector")
    ft, gt = partial(f, n), partial(g, n)
    out = Polynomial.zero(f.variables)
    for i, ai in enumerate(p.a):
        if ai:
            out = out + (ft * partial(g, i) - gt * partial(f, i)) * ai
    return out * (Fraction(1, 4) / norm2)


def coordinate(name: str, n: int) -> Polynomial:
    return Polynomial.variable(name, observable_variables(n))


def displayed_inverse(a: Sequence) -> Matrix:
    """[[0_n, -a/|a|^2], [a^T/|a|^2, 0]], the inverse block as written by hand."""
    a = [as_rational(x) for x in a]
    n = len(a)
    norm2 = sum((x * x for x in a), Fraction(0))
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for i, ai in enumerate(a):
        rows[i][n] = -ai / norm2
        rows[n][i] = ai / norm2
    return Matrix.from_rows(rows)
