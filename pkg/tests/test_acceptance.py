"""Acceptance criteria. Every comparison is exact equality; each test prints one status line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also written through ``capsys.disabled()`` so they show under ``-v``.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from galilea.exact import Matrix, penrose_conditions, pseudo_inverse
from galilea.forms import (
    BilinearForm,
    GalileanParameters,
    adjoint,
    apply,
    evaluate,
    four_momentum,
    galilean_form,
    is_isometry,
    preserves_quadratic_form,
    rank_report,
    split,
    translation_defect,
)
from galilea.groups import boost, boost_family, rotation_algebra_generators
from galilea.invariants import InvarianceProblem, solve_invariant_forms
from galilea.poisson import bracket, galilean_structure, jacobi_defect, leibniz_defect
from galilea.poly import Polynomial, observable_variables, partial, random_polynomial
from galilea.report import DISCREPANCY, verify_claims
from galilea.sampling import (
    random_form_isometry,
    random_galilean_parameters,
    random_matrix,
    random_symmetric_invertible,
    random_vector,
)

E = Matrix.elementary
_CLOCK = {}


@pytest.fixture(scope="module", autouse=True)
def module_clock():
    _CLOCK["start"] = time.perf_counter()
    yield


@pytest.fixture
def criterion(capsys):
    def report(number, name, ok, detail=""):
        with capsys.disabled():
            print(f"\nAC{number:>2} {'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
        assert ok, f"AC{number} failed: {name} {detail}"
    return report


def test_ac01_boost_solution_n2(criterion):
    basis = solve_invariant_forms(InvarianceProblem(3, [boost_family(2)]))
    # canonical span of {g11=g12=g21=g22=0, g31=-g13, g32=-g23}, written out by hand
    expected = [E(3, 0, 2) - E(3, 2, 0), E(3, 1, 2) - E(3, 2, 1), E(3, 2, 2)]
    ok = len(basis) == 3 and list(basis) == expected
    for g in basis:
        ok &= g[0, 0] == g[0, 1] == g[1, 0] == g[1, 1] == 0
        ok &= g[2, 0] == -g[0, 2] and g[2, 1] == -g[1, 2]
    criterion(1, "boosts-only n=2 basis matches the displayed solution matrix", ok, f"dimension {len(basis)}")


def test_ac02_parametrization_n3(criterion):
    basis = solve_invariant_forms(InvarianceProblem(4, [boost_family(3)]))
    units = [
        galilean_form(GalileanParameters(tuple(Fraction(int(i == k)) for i in range(3)), Fraction(int(k == 3)))).gram
        for k in range(4)
    ]
    ok = len(basis) == 4 and list(basis) == units
    criterion(2, "boosts-only n=3 basis has dimension 4 and equals the closed form at unit parameters", ok,
              f"dimension {len(basis)}")


def test_ac03_rotation_collapse(criterion):
    fams = [boost_family(3)] + rotation_algebra_generators(3)
    basis = solve_invariant_forms(InvarianceProblem(4, fams))
    check = next(c for c in verify_claims(3).checks if c.claimId == "rotation-invariance")
    ok = list(basis) == [E(4, 3, 3)] and check.status == DISCREPANCY
    criterion(3, "adding rotations at n=3 collapses the basis to span{E_tt}; report says DISCREPANCY", ok,
              f"dimension {len(basis)}, status {check.status}")


def test_ac04_nondegeneracy_audit(criterion):
    rng = random.Random(4)
    ok = True
    for n in (2, 3):
        for _ in range(20):
            p = GalileanParameters(random_vector(rng, n, nonzero=True), 0)
            rep = rank_report(split(galilean_form(p))[1])
            ok &= rep.rank == 2 and len(rep.radical_basis) == n - 1 and not rep.nondegenerate
        status = {c.claimId: c.status for c in verify_claims(n).checks}
        ok &= status["antisymmetric-nondegenerate"] == DISCREPANCY
    for _ in range(20):
        p = GalileanParameters(random_vector(rng, 1, nonzero=True), 0)
        ok &= rank_report(split(galilean_form(p))[1]).nondegenerate
    status1 = {c.claimId: c.status for c in verify_claims(1).checks}
    ok &= status1["antisymmetric-nondegenerate"] == "PASS"
    criterion(4, "antisymmetric part: rank 2 and radical n-1 for n in {2,3}, nondegenerate for n=1", ok)


def test_ac05_pseudo_inverse_identity(criterion):
    rng = random.Random(5)
    ok = True
    trials = 25
    for _ in range(trials):
        a = random_vector(rng, 3, nonzero=True)
        gas = split(galilean_form(GalileanParameters(a, 0)))[1].gram
        norm2 = sum(x * x for x in a)
        # displayed matrix built entry by entry
        rows = [[Fraction(0)] * 4 for _ in range(4)]
        for i in range(3):
            rows[i][3] = -a[i] / norm2
            rows[3][i] = a[i] / norm2
        x = pseudo_inverse(gas)
        ok &= x == Matrix.from_rows(rows)
        ok &= all(penrose_conditions(gas, x).values())
    criterion(5, "pseudo-inverse equals [[0, -a/|a|^2],[a^T/|a|^2, 0]] with all Penrose conditions", ok,
              f"{trials} random a")


def test_ac06_bracket_table(criterion):
    rng = random.Random(6)
    n = 3
    vs = observable_variables(n)
    xs = Polynomial.gens(vs)
    t = xs[n]
    ok = True
    for k in range(50):
        a = random_vector(rng, n, nonzero=True)
        s = galilean_structure(GalileanParameters(a, random_vector(rng, 1)[0]))
        c = Fraction(1, 4) / sum(x * x for x in a)
        for i in range(n):
            ok &= bracket(s, t, xs[i]) == Polynomial.constant(a[i] * c, vs)
            for j in range(n):
                ok &= bracket(s, xs[i], xs[j]).is_zero()
        f = random_polynomial(rng, vs, max_degree=3)
        rhs_t = Polynomial.zero(vs)
        for i in range(n):
            rhs_t = rhs_t + partial(f, i) * (a[i] * c)
        ok &= bracket(s, t, f) == rhs_t
        for i in range(n):
            ok &= bracket(s, xs[i], f) == partial(f, n) * (-a[i] * c)
    criterion(6, "{t,x^i}, {x^i,x^j}, {t,f}, {x^i,f} match the closed table", ok, "50 random f, degree <= 3")


def test_ac07_jacobi_leibniz(criterion):
    rng = random.Random(7)
    ok = True
    count = 0
    for n in (1, 2, 3):
        vs = observable_variables(n)
        for _ in range(100):
            s = galilean_structure(random_galilean_parameters(rng, n))
            f, g, h = (random_polynomial(rng, vs, max_degree=3) for _ in range(3))
            ok &= jacobi_defect(s, f, g, h).is_zero()
            ok &= leibniz_defect(s, f, g, h).is_zero()
            count += 1
    criterion(7, "Jacobi and Leibniz defects are the zero polynomial", ok, f"{count} triples over n in {{1,2,3}}")


def test_ac08_isometry_laws(criterion):
    rng = random.Random(8)
    ok = True
    for n in (1, 2, 3):
        basis = solve_invariant_forms(InvarianceProblem(n + 1, [boost_family(n)]))
        for _ in range(50):
            b = boost(random_vector(rng, n))
            for g in basis:
                ok &= is_isometry(b, BilinearForm(g))
    eye_checks = 0
    for k in range(60):
        d = 2 + k % 3
        g = BilinearForm(random_symmetric_invertible(rng, d))
        a = random_form_isometry(rng, g.gram) if k % 2 else random_matrix(rng, d, d)
        ok &= adjoint(adjoint(a, g), g) == a
        ok &= is_isometry(a, g) == (adjoint(a, g) @ a == Matrix.identity(d))
        ok &= preserves_quadratic_form(a, g) == is_isometry(a, g)
        eye_checks += 1
    criterion(8, "boosts preserve every solved form; A**=A, isometry <=> A*A=I, polarization", ok,
              f"150 boosts x basis forms, {eye_checks} symmetric grams")


def test_ac09_translation_defect(criterion):
    rng = random.Random(9)
    n = 3
    names = [f"x{i}" for i in range(n)] + ["tx"] + [f"y{i}" for i in range(n)] + ["ty"] + [f"s{i}" for i in range(n)]
    gens = Polynomial.gens(names)
    x, y, s = gens[:n + 1], gens[n + 1:2 * n + 2], gens[2 * n + 2:]
    shift = s + [Polynomial.zero(names)]
    ok = True
    for _ in range(50):
        p = GalileanParameters(random_vector(rng, n, nonzero=True), random_vector(rng, 1)[0])
        G = galilean_form(p).gram

        def g_sym(u, w):
            acc = Polynomial.zero(names)
            for i in range(n + 1):
                for j in range(n + 1):
                    if G[i, j]:
                        acc = acc + u[i] * w[j] * G[i, j]
            return acc

        xs = [a + b for a, b in zip(x, shift)]
        ys = [a + b for a, b in zip(y, shift)]
        defect = g_sym(xs, ys) - g_sym(x, y)
        a_dot_s = Polynomial.zero(names)
        for ai, si in zip(p.a, s):
            a_dot_s = a_dot_s + si * ai
        ok &= defect == (y[n] - x[n]) * a_dot_s
        # the library routine on a random instance, and at equal times
        sv = random_vector(rng, n)
        xv, yv = random_vector(rng, n + 1), random_vector(rng, n + 1)
        expected = (yv[n] - xv[n]) * sum(ai * si for ai, si in zip(p.a, sv))
        ok &= translation_defect(p, sv + (0,), xv, yv) == expected
        ok &= translation_defect(p, sv + (0,), xv, yv[:n] + (xv[n],)) == 0
    criterion(9, "spatial-shift defect equals (t_y - t_x)(a.s) symbolically; zero at equal times", ok, "50 instances")


def test_ac10_momentum_support(criterion):
    rng = random.Random(10)
    ok = True
    for _ in range(50):
        n = rng.randint(1, 4)
        p = random_galilean_parameters(rng, n)
        g = galilean_form(p)
        w = random_vector(rng, n + 1)
        ok &= evaluate(g, w, w) == p.a0 * w[n] ** 2
        b = boost(random_vector(rng, n))
        event = random_vector(rng, n) + (Fraction(0),)
        ok &= apply(b, event) == event
        m, v = random_vector(rng, 1)[0], random_vector(rng, n)
        ok &= apply(b, four_momentum(m, v))[n] == m
    criterion(10, "diagonal law a0 t^2, time-zero events fixed by boosts, mass component preserved", ok)


def test_ac11_determinism(criterion):
    cmd = [sys.executable, "-m", "galilea", "verify-paper", "--dim", "3", "--json"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    ok = all(r.returncode == 0 for r in runs) and runs[0].stdout == runs[1].stdout and runs[0].stdout
    if ok:
        json.loads(runs[0].stdout)
    criterion(11, "repeated verify-paper --dim 3 --json output is byte-identical", bool(ok),
              f"{len(runs[0].stdout)} bytes")


def test_ac_runtime_budget(criterion):
    elapsed = time.perf_counter() - _CLOCK["start"]
    criterion(0, "all acceptance runs complete in under 5 seconds", elapsed < 5.0, f"{elapsed:.2f}s")
