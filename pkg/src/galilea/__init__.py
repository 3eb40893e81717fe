"""Exact computation of invariant bilinear forms, Galilean forms and their Poisson brackets."""

from .exact import Matrix, inverse, nullspace, pseudo_inverse, rank, rational_parse, rref
from .forms import BilinearForm, GalileanParameters, galilean_form, rank_report, split
from .groups import boost_family, cayley_rotation, rotation_algebra_generators
from .invariants import InvarianceProblem, solve_invariant_forms, verify_invariance
from .poisson import bracket, galilean_structure, structure_from_form
from .poly import Polynomial, poly_parse

__version__ = "0.1.0"
