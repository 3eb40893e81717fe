import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galilea.exact import DimensionError, Matrix, ParseError
from galilea.forms import (
    BilinearForm,
    FormHypothesisError,
    GalileanParameters,
    adjoint,
    apply,
    evaluate,
    four_momentum,
    four_velocity,
    galilean_form,
    is_isometry,
    load_form,
    preserves_quadratic_form,
    rank_report,
    split,
    translation_defect,
)
from galilea.groups import boost, cayley_rotation
from galilea.sampling import random_form_isometry, random_matrix, random_symmetric_invertible

from .oracles import minor_rank
from .strategies import nonzero_rationals, rationals, vectors

M = Matrix.from_rows
E = Matrix.elementary


@st.composite
def galilean_params(draw, n=None, nonzero=True):
    n = n if n is not None else draw(st.integers(1, 4))
    return GalileanParameters(draw(vectors(n, nonzero=nonzero)), draw(rationals))


def test_galilean_form_reproduces_displayed_solution():
    g13, g23, g33 = Fraction(2), Fraction(-3), Fraction(5, 2)
    g = galilean_form(GalileanParameters((g13, g23), g33)).gram
    assert g == M([[0, 0, g13], [0, 0, g23], [-g13, -g23, g33]])


def test_galilean_form_pure_time():
    assert galilean_form(GalileanParameters((0, 0, 0), 1)).gram == E(4, 3, 3)


def test_galilean_form_direct_evaluation():
    g = galilean_form(GalileanParameters((1, 0, 0), 0), 3)
    assert evaluate(g, (1, 0, 0, 0), (0, 0, 0, 1)) == 1


def test_galilean_form_dimension_mismatch():
    with pytest.raises(DimensionError):
        galilean_form(GalileanParameters((1, 2), 0), 3)


@given(galilean_params(nonzero=False), st.data())
def test_galilean_closed_form(p, data):
    n = p.n
    x = data.draw(vectors(n + 1))
    y = data.draw(vectors(n + 1))
    tx, ty = x[n], y[n]
    expected = sum((a * (ty * xi - tx * yi) for a, xi, yi in zip(p.a, x, y)), Fraction(0)) + p.a0 * tx * ty
    assert evaluate(galilean_form(p), x, y) == expected


def test_evaluate_examples():
    assert evaluate(BilinearForm(E(3, 2, 2)), (1, 2, 3), (4, 5, 6)) == 18
    with pytest.raises(DimensionError):
        evaluate(BilinearForm(E(3, 2, 2)), (1, 2), (4, 5, 6))


@given(galilean_params(), st.data())
def test_diagonal_law_and_boost_invariance(p, data):
    n = p.n
    g = galilean_form(p)
    w = data.draw(vectors(n + 1))
    assert evaluate(g, w, w) == p.a0 * w[n] ** 2
    x, y, v = data.draw(vectors(n + 1)), data.draw(vectors(n + 1)), data.draw(vectors(n))
    b = boost(v)
    assert evaluate(g, apply(b, x), apply(b, y)) == evaluate(g, x, y)


def test_split_galilean():
    p = GalileanParameters((1, 2, 3), 7)
    sym, asym = split(galilean_form(p))
    assert sym.gram == E(4, 3, 3) * 7
    assert asym.gram == galilean_form(GalileanParameters((1, 2, 3), 0)).gram
    x, y = (1, 1, 2, 3), (2, 0, 1, 5)
    assert evaluate(asym, x, y) == sum(a * (y[3] * xi - x[3] * yi) for a, xi, yi in zip(p.a, x, y))


def test_split_pure_cases():
    s = M([[1, 2], [2, 3]])
    a = M([[0, 2], [-2, 0]])
    assert split(BilinearForm(s)) == (BilinearForm(s), BilinearForm(Matrix.zeros(2, 2)))
    assert split(BilinearForm(a)) == (BilinearForm(Matrix.zeros(2, 2)), BilinearForm(a))


@given(st.integers(1, 5), st.integers(0, 10_000))
def test_split_reconstructs(d, seed):
    g = BilinearForm(random_matrix(random.Random(seed), d, d))
    sym, asym = split(g)
    assert sym.gram + asym.gram == g.gram
    assert sym.gram.is_symmetric() and asym.gram.is_antisymmetric()


def test_rank_report_n1_nondegenerate():
    rep = rank_report(split(galilean_form(GalileanParameters((1,), 0)))[1])
    assert rep.rank == 2 and rep.nondegenerate and rep.radical_basis == ()


def test_rank_report_n3_degenerate():
    asym = split(galilean_form(GalileanParameters((1, 2, 3), 0)))[1]
    rep = rank_report(asym)
    assert rep.rank == 2 == minor_rank(asym.gram.to_rows())
    assert not rep.nondegenerate
    assert len(rep.radical_basis) == 2
    for v in rep.radical_basis:
        assert v[3] == 0
        assert v[0] * 1 + v[1] * 2 + v[2] * 3 == 0
    assert rep.radical_basis == ((-2, 1, 0, 0), (-3, 0, 1, 0))


def test_rank_report_full_galilean():
    for a0 in (0, 1, Fraction(-7, 2)):
        assert rank_report(galilean_form(GalileanParameters((1, -1, 2), a0))).rank == 2


def test_rank_report_time_form():
    rep = rank_report(BilinearForm(E(4, 3, 3)))
    assert rep.rank == 1
    assert rep.radical_basis == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))


@given(st.integers(0, 10_000), st.integers(1, 5))
def test_radical_vectors_annihilate(seed, d):
    rng = random.Random(seed)
    g = BilinearForm(random_matrix(rng, d, d, bound=1))
    rep = rank_report(g)
    for y in rep.radical_basis:
        for i in range(d):
            z = tuple(Fraction(int(i == j)) for j in range(d))
            assert evaluate(g, y, z) == 0
    assert rep.rank + len(rep.radical_basis) == d


@given(galilean_params())
def test_antisymmetric_part_has_rank_two(p):
    rep = rank_report(split(galilean_form(p))[1])
    assert rep.rank == 2
    assert len(rep.radical_basis) == p.n - 1
    assert rep.nondegenerate == (p.n == 1)


def test_adjoint_examples():
    a = M([[1, 2], [3, 4]])
    assert adjoint(a, BilinearForm(Matrix.identity(2))) == a.T
    g = BilinearForm(M([[1, 0], [0, -1]]))
    assert adjoint(M([[0, 1], [1, 0]]), g) == M([[0, -1], [-1, 0]])


def test_adjoint_refuses_bad_forms():
    with pytest.raises(FormHypothesisError, match="symmetric"):
        adjoint(Matrix.identity(4), galilean_form(GalileanParameters((1, 0, 0), 1)))
    with pytest.raises(FormHypothesisError, match="nondegenerate"):
        adjoint(Matrix.identity(2), BilinearForm(M([[1, 0], [0, 0]])))


@given(st.integers(0, 10_000), st.integers(1, 4))
def test_adjoint_involution_and_defining_identity(seed, d):
    rng = random.Random(seed)
    g = BilinearForm(random_symmetric_invertible(rng, d))
    a = random_matrix(rng, d, d)
    star = adjoint(a, g)
    assert adjoint(star, g) == a
    x = tuple(Fraction(rng.randint(-3, 3)) for _ in range(d))
    y = tuple(Fraction(rng.randint(-3, 3)) for _ in range(d))
    assert evaluate(g, apply(star, x), y) == evaluate(g, x, apply(a, y))


@given(st.integers(0, 10_000), st.integers(1, 4), st.booleans())
def test_isometry_iff_adjoint_inverse(seed, d, make_isometry):
    rng = random.Random(seed)
    g = BilinearForm(random_symmetric_invertible(rng, d))
    a = random_form_isometry(rng, g.gram) if make_isometry else random_matrix(rng, d, d, bound=2)
    iso = is_isometry(a, g)
    assert iso == (adjoint(a, g) @ a == Matrix.identity(d))
    if make_isometry:
        assert iso


@given(st.integers(0, 10_000), st.integers(1, 4), st.booleans())
def test_polarization(seed, d, make_isometry):
    rng = random.Random(seed)
    g = BilinearForm(random_symmetric_invertible(rng, d))
    a = random_form_isometry(rng, g.gram) if make_isometry else random_matrix(rng, d, d, bound=2)
    assert preserves_quadratic_form(a, g) == is_isometry(a, g)


def test_polarization_needs_symmetry():
    # an antisymmetric form has q = 0, so every operator "preserves" it
    g = BilinearForm(M([[0, 1], [-1, 0]]))
    a = M([[2, 0], [0, 1]])
    assert preserves_quadratic_form(a, g) and not is_isometry(a, g)


def test_is_isometry_examples():
    g = galilean_form(GalileanParameters((1, 2, 3), 4))
    assert is_isometry(boost([Fraction(1, 2), -3, 7]), g)
    s = M([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    r = cayley_rotation(s)
    assert r == M([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert not is_isometry(r, galilean_form(GalileanParameters((1, 0, 0), 0)))
    assert is_isometry(Matrix.identity(4), g)


def test_translation_defect_examples():
    p = GalileanParameters((1, 0, 0), 0)
    assert translation_defect(p, (1, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 1)) == 1
    assert translation_defect(p, (0, 0, 0, 0), (1, 2, 3, 4), (5, 6, 7, 8)) == 0
    assert translation_defect(p, (5, 1, 2, 0), (1, 2, 3, 4), (5, 6, 7, 4)) == 0
    with pytest.raises(DimensionError):
        translation_defect(p, (1, 0, 0), (0, 0, 0, 0), (0, 0, 0, 1))


@given(galilean_params(), st.data())
def test_translation_defect_formula(p, data):
    n = p.n
    s = data.draw(vectors(n))
    x, y = data.draw(vectors(n + 1)), data.draw(vectors(n + 1))
    a_dot_s = sum((a * b for a, b in zip(p.a, s)), Fraction(0))
    assert translation_defect(p, s + (0,), x, y) == (y[n] - x[n]) * a_dot_s


def test_four_vectors():
    assert four_velocity((1, 2)) == (1, 2, 1)
    assert four_momentum(3, (1, Fraction(1, 2))) == (3, Fraction(3, 2), 3)
    assert four_momentum(0, (4, 5)) == (0, 0, 0)


@given(nonzero_rationals, vectors(3), vectors(3))
def test_boost_shifts_momentum_and_keeps_mass(m, v, u):
    moved = apply(boost(u), four_momentum(m, v))
    assert moved == four_momentum(m, [a + b for a, b in zip(v, u)])
    assert moved[3] == m


@given(galilean_params(), st.data())
def test_four_velocity_diagonal(p, data):
    v = data.draw(vectors(p.n))
    w = four_velocity(v)
    assert evaluate(galilean_form(p), w, w) == p.a0


@given(vectors(3), vectors(3))
def test_time_zero_events_are_fixed_by_boosts(x, v):
    event = x + (Fraction(0),)
    assert apply(boost(v), event) == event


def test_load_form():
    g = load_form({"galilean": {"n": 2, "a": ["1", "2"], "a0": "5"}})
    assert g == galilean_form(GalileanParameters((1, 2), 5))
    doc = {"dimension": 2, "gram": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "-1"]]}}
    assert load_form(doc).gram == M([[1, 0], [0, -1]])


@pytest.mark.parametrize("doc", [
    {"galilean": {"n": 2, "a": ["1"]}},
    {"galilean": {"a": ["1"]}},
    {"dimension": 3, "gram": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}},
    {"dimension": 2},
    [],
])
def test_load_form_rejects(doc):
    with pytest.raises(ParseError):
        load_form(doc)
