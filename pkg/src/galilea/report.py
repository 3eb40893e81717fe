"""Registry of reproducible checks behind ``galilea verify-paper``.

Each check recomputes one published claim exactly and returns a status:

* PASS: exact computation agrees with the claim.
* FAIL: exact computation disagrees and the library is at fault.
* DISCREPANCY: exact computation disagrees with the claim as worded in
  the source (the claim itself is wrong or only holds in a special case).

Every check seeds its own ``random.Random`` so reports are byte-identical.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

from .exact import Matrix, penrose_conditions, pseudo_inverse, rational_format
from .forms import (
    BilinearForm,
    GalileanParameters,
    adjoint,
    apply,
    evaluate,
    four_momentum,
    four_velocity,
    galilean_form,
    is_isometry,
    preserves_quadratic_form,
    rank_report,
    split,
    translation_defect,
)
from .groups import boost, boost_algebra_generators, boost_family, rotation_algebra_generators
from .invariants import InvarianceProblem, solve_invariant_forms, verify_invariance
from .poisson import (
    bracket,
    displayed_inverse,
    galilean_bracket_closed_form,
    galilean_structure,
    hamiltonian_field,
    jacobi_defect,
    leibniz_defect,
)
from .poly import Polynomial, observable_variables, partial, random_polynomial
from .sampling import (
    random_form_isometry,
    random_galilean_parameters,
    random_matrix,
    random_symmetric_invertible,
    random_vector,
)

PASS = "PASS"
FAIL = "FAIL"
DISCREPANCY = "DISCREPANCY"

SEED = 20060401
SAMPLES = 10


@dataclass(frozen=True)
class Check:
    claimId: str
    location: str
    status: str
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    n: int
    checks: tuple[Check, ...]

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)

    @property
    def exit_code(self) -> int:
        return 1 if self.count(FAIL) else 0

    def to_json(self) -> str:
        doc = {
            "n": self.n,
            "dimension": self.n + 1,
            "checks": [asdict(c) for c in self.checks],
            "summary": {s: self.count(s) for s in (PASS, DISCREPANCY, FAIL)},
        }
        return json.dumps(doc, indent=2)

    def to_text(self) -> str:
        lines = [f"claim verification for n = {self.n} (dimension {self.n + 1})"]
        for c in self.checks:
            lines.append(f"{c.status:<11} {c.claimId}  [{c.location}]")
            lines.append(f"            {c.detail}")
        lines.append(
            f"summary: {self.count(PASS)} PASS, {self.count(DISCREPANCY)} DISCREPANCY, {self.count(FAIL)} FAIL"
        )
        return "\n".join(lines)


def _ok(flag: bool, detail: str, bad: str = FAIL) -> tuple[str, str]:
    return (PASS if flag else bad), detail


def _fmt_vec(v) -> str:
    return "(" + ", ".join(rational_format(x) for x in v) + ")"


# -- individual checks ----------------------------------------------------

def check_boost_matrix(n, rng):
    fam = boost_family(n)
    u = random_vector(rng, n)
    v = random_vector(rng, n)
    composed = boost(u) @ boost(v) == boost([a + b for a, b in zip(u, v)])
    displayed = True
    if n == 2:
        v1, v2 = Polynomial.gens(fam.parameters)
        one, zero = Polynomial.constant(1, fam.parameters), Polynomial.zero(fam.parameters)
        expected = [[one, zero, v1], [zero, one, v2], [zero, zero, one]]
        displayed = all(fam.matrix[i, j] == expected[i][j] for i in range(3) for j in range(3))
    return _ok(composed and displayed,
               f"boost matrix (x, t) -> (x + v t, t); composition adds velocities"
               + ("; matches the displayed 3x3 matrix" if n == 2 else ""))


def check_boost_invariant_forms(n, rng):
    d = n + 1
    basis = solve_invariant_forms(InvarianceProblem(d, [boost_family(n)]))
    ok = len(basis) == n + 1
    for m in basis:
        ok &= all(m[i, j] == 0 for i in range(n) for j in range(n))
        ok &= all(m[i, n] == -m[n, i] for i in range(n))
    return _ok(ok, f"boost-invariant forms: basis dimension {len(basis)} (expected {n + 1}); "
                   "spatial block zero, space-time block antisymmetric")


def check_galilean_parametrization(n, rng):
    d = n + 1
    basis = solve_invariant_forms(InvarianceProblem(d, [boost_family(n)]))
    units = []
    for k in range(n + 1):
        a = tuple(Fraction(int(i == k)) for i in range(n))
        units.append(galilean_form(GalileanParameters(a, Fraction(int(k == n)))).gram)
    ok = list(basis) == units
    return _ok(ok, f"each of the {len(basis)} solver basis forms equals the closed form at a unit (a, a0)")


def check_galilean_invariance(n, rng):
    fam = boost_family(n)
    ok = True
    for _ in range(SAMPLES):
        p = random_galilean_parameters(rng, n)
        ok &= verify_invariance(galilean_form(p).gram, fam).invariant
    return _ok(ok, f"{SAMPLES} random closed-form instances are invariant identically in v")


def check_algebra_matches_group(n, rng):
    d = n + 1
    group = solve_invariant_forms(InvarianceProblem(d, [boost_family(n)]))
    algebra = solve_invariant_forms(InvarianceProblem(d, boost_algebra_generators(n)))
    return _ok(group == algebra, "kernel of X^T G + G X = 0 equals the parametric-group kernel")


def check_rotation_invariance(n, rng):
    d = n + 1
    rots = rotation_algebra_generators(n)
    boosts_only = solve_invariant_forms(InvarianceProblem(d, [boost_family(n)]))
    both = solve_invariant_forms(InvarianceProblem(d, [boost_family(n)] + rots))
    if len(both) == len(boosts_only):
        return PASS, f"{len(rots)} rotation generators; basis dimension stays {len(both)}"
    ett = Matrix.elementary(d, n, n)
    collapsed = list(both) == [ett]
    if not collapsed:
        return FAIL, f"unexpected basis of dimension {len(both)} with rotations"
    return DISCREPANCY, (
        f"adding {len(rots)} rotation generators collapses the basis from {len(boosts_only)} to "
        "span{E_tt}: a nonzero spatial vector a is not rotation invariant"
    )


def check_polarization(n, rng):
    d = n + 1
    agree = 0
    for k in range(SAMPLES):
        g = BilinearForm(random_symmetric_invertible(rng, d))
        a = random_form_isometry(rng, g.gram) if k % 2 == 0 else random_matrix(rng, d, d)
        agree += preserves_quadratic_form(a, g) == is_isometry(a, g)
    return _ok(agree == SAMPLES, f"{agree}/{SAMPLES}: quadratic-form preservation on e_i, e_i + e_j "
                                 "agrees with full isometry for symmetric g")


def check_adjoint_involution(n, rng):
    d = n + 1
    ok = True
    for _ in range(SAMPLES):
        g = BilinearForm(random_symmetric_invertible(rng, d))
        a = random_matrix(rng, d, d)
        ok &= adjoint(adjoint(a, g), g) == a
        x, y = random_vector(rng, d), random_vector(rng, d)
        ok &= evaluate(g, apply(adjoint(a, g), x), y) == evaluate(g, x, apply(a, y))
    return _ok(ok, f"A** = A and g(A*x, y) = g(x, Ay) on {SAMPLES} random symmetric invertible forms")


def check_isometry_adjoint(n, rng):
    d = n + 1
    ok = True
    eye = Matrix.identity(d)
    for k in range(SAMPLES):
        g = BilinearForm(random_symmetric_invertible(rng, d))
        a = random_form_isometry(rng, g.gram) if k % 2 == 0 else random_matrix(rng, d, d)
        ok &= is_isometry(a, g) == (adjoint(a, g) @ a == eye)
    return _ok(ok, "A^T G A = G exactly when A* A = I, on isometries and random operators")


def check_form_not_symmetric(n, rng):
    p = random_galilean_parameters(rng, n)
    g = galilean_form(p).gram
    return _ok(not g.is_symmetric(), f"a = {_fmt_vec(p.a)}: Gram matrix is not symmetric")


def check_spatial_translation(n, rng):
    ok = True
    for _ in range(SAMPLES):
        p = random_galilean_parameters(rng, n)
        s = random_vector(rng, n)
        x, y = random_vector(rng, n + 1), random_vector(rng, n + 1)
        shift = s + (Fraction(0),)
        a_dot_s = sum((a * b for a, b in zip(p.a, s)), Fraction(0))
        ok &= translation_defect(p, shift, x, y) == (y[n] - x[n]) * a_dot_s
        y_same = y[:n] + (x[n],)
        ok &= translation_defect(p, shift, x, y_same) == 0
    return _ok(ok, "defect under a spatial shift s is (t_y - t_x)(a . s); zero at equal times")


def check_time_translation(n, rng):
    p = random_galilean_parameters(rng, n)
    p = GalileanParameters(p.a, Fraction(1))
    shift = (Fraction(0),) * n + (Fraction(1),)
    origin = (Fraction(0),) * (n + 1)
    defect = translation_defect(p, shift, origin, origin)
    return _ok(defect != 0, f"time shift by 1 at the origin changes g by {rational_format(defect)}")


def check_momentum(n, rng):
    ok = True
    for _ in range(SAMPLES):
        p = random_galilean_parameters(rng, n)
        g = galilean_form(p)
        w = random_vector(rng, n + 1)
        ok &= evaluate(g, w, w) == p.a0 * w[n] ** 2
        v, u = random_vector(rng, n), random_vector(rng, n)
        ok &= evaluate(g, four_velocity(v), four_velocity(v)) == p.a0
        m = random_vector(rng, 1)[0]
        moved = apply(boost(u), four_momentum(m, v))
        ok &= moved == four_momentum(m, [a + b for a, b in zip(v, u)])
    return _ok(ok, "g(w, w) = a0 t_w^2; boosts send (m v, m) to (m (v + u), m)")


def check_time_zero(n, rng):
    ok = True
    for _ in range(SAMPLES):
        x = random_vector(rng, n) + (Fraction(0),)
        ok &= apply(boost(random_vector(rng, n)), x) == x
    return _ok(ok, "every boost fixes every event with t = 0")


def check_nondegenerate(n, rng):
    p = random_galilean_parameters(rng, n)
    rep = rank_report(split(galilean_form(p))[1])
    if rep.rank != 2 or len(rep.radical_basis) != n - 1:
        return FAIL, f"unexpected rank {rep.rank} for the antisymmetric part"
    if rep.nondegenerate:
        return PASS, f"antisymmetric part has rank 2 = dimension; nondegenerate, constant hence symplectic"
    return DISCREPANCY, (
        f"antisymmetric part has rank 2 < {n + 1}; radical of dimension {n - 1} is "
        f"{{(x, 0) : a . x = 0}}; nondegenerate (and symplectic) only when n = 1"
    )


def check_inverse_form(n, rng):
    ok = True
    for _ in range(SAMPLES):
        p = random_galilean_parameters(rng, n)
        gas = split(galilean_form(p))[1].gram
        x = pseudo_inverse(gas)
        ok &= x == displayed_inverse(p.a)
        ok &= all(penrose_conditions(gas, x).values())
    return _ok(ok, "pseudo-inverse of the antisymmetric block equals [[0, -a/|a|^2], [a^T/|a|^2, 0]]; "
                   "all four Penrose conditions hold")


def check_bracket_formula(n, rng):
    vs = observable_variables(n)
    ok = True
    for _ in range(SAMPLES):
        p = random_galilean_parameters(rng, n)
        s = galilean_structure(p)
        f, g = random_polynomial(rng, vs), random_polynomial(rng, vs)
        ok &= bracket(s, f, g) == galilean_bracket_closed_form(p, f, g)
    return _ok(ok, "bivector bracket agrees with a/(4|a|^2) . (d_t f grad g - d_t g grad f)")


def check_bracket_table(n, rng):
    vs = observable_variables(n)
    xs = Polynomial.gens(vs)
    t = xs[n]
    p = random_galilean_parameters(rng, n)
    s = galilean_structure(p)
    c = Fraction(1, 4) / p.norm2()
    ok = True
    for i in range(n):
        ok &= bracket(s, t, xs[i]) == p.a[i] * c
        for j in range(n):
            ok &= bracket(s, xs[i], xs[j]).is_zero()
    for _ in range(SAMPLES):
        f = random_polynomial(rng, vs)
        grad = Polynomial.zero(vs)
        for i in range(n):
            grad = grad + partial(f, i) * p.a[i]
        ok &= bracket(s, t, f) == grad * c
        for i in range(n):
            ok &= bracket(s, xs[i], f) == partial(f, n) * (-p.a[i] * c)
    return _ok(ok, f"a = {_fmt_vec(p.a)}: {{t, x1}} = {rational_format(p.a[0] * c)}; {{x^i, x^j}} = 0; "
                   "{t, f} and {x^i, f} match on random f")


def check_hamiltonian_fields(n, rng):
    vs = observable_variables(n)
    xs = Polynomial.gens(vs)
    p = random_galilean_parameters(rng, n)
    s = galilean_structure(p)
    c = Fraction(1, 4) / p.norm2()
    zero = Polynomial.zero(vs)
    xt = hamiltonian_field(s, xs[n]).components
    ok = xt == tuple(Polynomial.constant(ai * c, vs) for ai in p.a) + (zero,)
    for i in range(n):
        xi = hamiltonian_field(s, xs[i]).components
        ok &= xi == (zero,) * n + (Polynomial.constant(-p.a[i] * c, vs),)
    for _ in range(SAMPLES):
        f, g = random_polynomial(rng, vs), random_polynomial(rng, vs)
        ok &= hamiltonian_field(s, f).apply(g) == bracket(s, f, g)
    return _ok(ok, "X_t is proportional to a . grad and X_{x^i} to a^i d_t; X_f(g) = {f, g}")


def check_jacobi(n, rng):
    vs = observable_variables(n)
    ok = True
    for _ in range(SAMPLES):
        s = galilean_structure(random_galilean_parameters(rng, n))
        f, g, h = (random_polynomial(rng, vs) for _ in range(3))
        ok &= jacobi_defect(s, f, g, h).is_zero()
        ok &= leibniz_defect(s, f, g, h).is_zero()
        ok &= (bracket(s, f, g) + bracket(s, g, f)).is_zero()
    return _ok(ok, "Jacobi, Leibniz and antisymmetry defects vanish identically on random triples")


REGISTRY: tuple[tuple[str, str, Callable], ...] = (
    ("boost-matrix", "definition of a Galilean boost", check_boost_matrix),
    ("boost-invariant-forms", "solution of the isometry relation for boosts", check_boost_invariant_forms),
    ("galilean-parametrization", "closed form g(x, x') = a . (t' x - t x') + a0 t t'", check_galilean_parametrization),
    ("galilean-form-invariance", "boost invariance of the closed form", check_galilean_invariance),
    ("algebra-matches-group", "infinitesimal isometry relation", check_algebra_matches_group),
    ("rotation-invariance", "boosts and spatial rotations as isometries", check_rotation_invariance),
    ("polarization", "isometries of symmetric forms via the quadratic form", check_polarization),
    ("adjoint-involution", "involution of an operator", check_adjoint_involution),
    ("isometry-iff-adjoint", "isometry iff A* A = Id", check_isometry_adjoint),
    ("form-not-symmetric", "remark: the invariant form is nonsymmetric", check_form_not_symmetric),
    ("spatial-translation-defect", "remark: spatial translations", check_spatial_translation),
    ("time-translation-defect", "remark: time translations", check_time_translation),
    ("momentum-four-vector", "momentum 4-vector (p, m)", check_momentum),
    ("time-zero-subspace", "remark: frames coincide at time 0", check_time_zero),
    ("antisymmetric-nondegenerate", "nondegeneracy of the antisymmetric part; symplectic form", check_nondegenerate),
    ("inverse-form", "inverse of the antisymmetric part", check_inverse_form),
    ("bracket-formula", "closed bracket formula", check_bracket_formula),
    ("bracket-table", "bracket values for particular functions", check_bracket_table),
    ("hamiltonian-fields", "vector fields of t and x", check_hamiltonian_fields),
    ("jacobi-leibniz", "Poisson bracket axioms", check_jacobi),
)


def verify_claims(n: int) -> VerificationReport:
    if n not in (1, 2, 3, 4):
        raise ValueError("n must be one of 1, 2, 3, 4")
    checks = []
    for k, (claim, location, fn) in enumerate(REGISTRY):
        rng = random.Random(SEED * 100 + k * 10 + n)
        try:
            status, detail = fn(n, rng)
        except Exception as exc:  # a crashing check is a failure, not a crash of the report
            status, detail = FAIL, f"{type(exc).__name__}: {exc}"
        checks.append(Check(claim, location, status, detail))
    return VerificationReport(n, tuple(checks))
