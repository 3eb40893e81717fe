"""Command line interface: solve, analyze, bracket, verify-paper, demo.

Exit codes: 0 success, 1 a verification check FAILed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .exact import DimensionError, Matrix, ParseError, matrix_to_json, pseudo_inverse, rational_format, rational_parse
from .forms import BilinearForm, GalileanParameters, galilean_form, load_form, rank_report, split
from .groups import boost_family, load_generators
from .invariants import InvarianceProblem, solve_invariant_forms
from .poisson import bracket, hamiltonian_field, structure_from_form
from .poly import Polynomial, format_poly, observable_variables, poly_parse
from .report import verify_claims


class UsageError(Exception):
    pass


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _vec_str(v) -> str:
    return "(" + ", ".join(rational_format(x) for x in v) + ")"


def _indent(text: str, pad: str = "  ") -> str:
    return "\n".join(pad + line for line in text.splitlines())


# -- solve ----------------------------------------------------------------

def cmd_solve(args) -> str:
    d, families = load_generators(_read_json(args.generators), algebra=args.algebra)
    basis = solve_invariant_forms(InvarianceProblem(d, families))
    doc = [matrix_to_json(m) for m in basis]
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    if args.json:
        return json.dumps({"dimension": d, "basis_dimension": len(basis), "basis": doc}, indent=2)
    lines = [f"dimension: {d}", f"generators: {len(families)}", f"basis dimension: {len(basis)}"]
    for k, m in enumerate(basis):
        lines.append(f"form {k}:")
        lines.append(_indent(str(m)))
    return "\n".join(lines)


# -- analyze --------------------------------------------------------------

def _analysis(g: BilinearForm) -> dict:
    sym, asym = split(g)
    parts = {}
    for name, form in (("form", g), ("symmetric", sym), ("antisymmetric", asym)):
        rep = rank_report(form)
        parts[name] = {
            "gram": form.gram,
            "rank": rep.rank,
            "nondegenerate": rep.nondegenerate,
            "radical": rep.radical_basis,
        }
    return {"dimension": g.dimension, "parts": parts, "pseudo_inverse": pseudo_inverse(asym.gram)}


def _analysis_json(a: dict) -> dict:
    return {
        "dimension": a["dimension"],
        **{
            name: {
                "gram": matrix_to_json(p["gram"]),
                "rank": p["rank"],
                "nondegenerate": p["nondegenerate"],
                "radical": [[rational_format(x) for x in v] for v in p["radical"]],
            }
            for name, p in a["parts"].items()
        },
        "antisymmetric_pseudo_inverse": matrix_to_json(a["pseudo_inverse"]),
    }


def _analysis_text(a: dict) -> str:
    lines = [f"dimension: {a['dimension']}"]
    for name, p in a["parts"].items():
        lines.append(f"{name}:")
        lines.append(_indent(str(p["gram"])))
        lines.append(f"  rank: {p['rank']}")
        lines.append(f"  nondegenerate: {str(p['nondegenerate']).lower()}")
        lines.append(f"  radical dimension: {len(p['radical'])}")
        for v in p["radical"]:
            lines.append(f"    {_vec_str(v)}")
    lines.append("pseudo-inverse of antisymmetric part:")
    lines.append(_indent(str(a["pseudo_inverse"])))
    return "\n".join(lines)


def cmd_analyze(args) -> str:
    a = _analysis(load_form(_read_json(args.form)))
    return json.dumps(_analysis_json(a), indent=2) if args.json else _analysis_text(a)


# -- bracket --------------------------------------------------------------

def cmd_bracket(args) -> str:
    g = load_form(_read_json(args.form))
    kappa = rational_parse(args.kappa)
    asym = split(g)[1]
    if asym.gram.is_zero():
        raise UsageError("the form has no antisymmetric part; no bracket to compute")
    s = structure_from_form(asym, kappa)
    variables = observable_variables(g.dimension - 1)
    f = poly_parse(args.f, variables)
    h = poly_parse(args.g, variables)
    result = format_poly(bracket(s, f, h))
    if args.json:
        doc = {"f": format_poly(f), "g": format_poly(h), "kappa": rational_format(kappa), "bracket": result}
        if args.show_bivector:
            doc["bivector"] = matrix_to_json(s.bivector)
        return json.dumps(doc, indent=2)
    lines = [result]
    if args.show_bivector:
        lines.append(json.dumps(matrix_to_json(s.bivector)))
    return "\n".join(lines)


# -- verify-paper ---------------------------------------------------------

def cmd_verify(args) -> tuple[str, int]:
    report = verify_claims(args.dim)
    return (report.to_json() if args.json else report.to_text()), report.exit_code


# -- demo -----------------------------------------------------------------

def cmd_demo(args) -> str:
    n = args.dim
    a = tuple(rational_parse(x) for x in args.a.split(",")) if args.a else ()
    if len(a) != n:
        raise UsageError(f"--a needs {n} comma-separated rationals, got {len(a)}")
    p = GalileanParameters(a, rational_parse(args.a0))
    g = galilean_form(p)
    basis = solve_invariant_forms(InvarianceProblem(n + 1, [boost_family(n)]))
    doc: dict = {
        "n": n,
        "a": [rational_format(x) for x in p.a],
        "a0": rational_format(p.a0),
        "boost_invariant_basis_dimension": len(basis),
        "analysis": _analysis_json(_analysis(g)),
    }
    lines = [
        f"Galilean form, n = {n}, a = {_vec_str(p.a)}, a0 = {rational_format(p.a0)}",
        f"boost-invariant basis dimension: {len(basis)}",
        _analysis_text(_analysis(g)),
    ]
    if any(p.a):
        s = structure_from_form(split(g)[1], rational_parse(args.kappa))
        vs = observable_variables(n)
        gens = Polynomial.gens(vs)
        table = {}
        for i, xi in enumerate(vs):
            for j in range(i + 1, len(vs)):
                table[f"{{{xi}, {vs[j]}}}"] = format_poly(bracket(s, gens[i], gens[j]))
        fields = {
            f"X_{v}": [format_poly(c) for c in hamiltonian_field(s, gens[k]).components]
            for k, v in enumerate(vs)
        }
        doc["bivector"] = matrix_to_json(s.bivector)
        doc["brackets"] = table
        doc["hamiltonian_fields"] = fields
        lines.append(f"bivector (kappa = {rational_format(s.kappa)}):")
        lines.append(_indent(str(s.bivector)))
        lines.append("coordinate brackets:")
        lines.extend(f"  {k} = {v}" for k, v in table.items())
        lines.append("hamiltonian vector fields (components along " + ", ".join(vs) + "):")
        lines.extend(f"  {k} = ({', '.join(v)})" for k, v in fields.items())
    return json.dumps(doc, indent=2) if args.json else "\n".join(lines)


# -- entry point ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galilea", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="all bilinear forms invariant under a generator file")
    p.add_argument("generators")
    p.add_argument("--algebra", action="store_true", help="impose boosts through their algebra generators")
    p.add_argument("--out", help="write the basis as a JSON list of matrices")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("analyze", help="split, rank, radical and pseudo-inverse of a form")
    p.add_argument("form")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bracket", help="Poisson bracket of two polynomial observables")
    p.add_argument("--form", required=True)
    p.add_argument("--kappa", default="1/4")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--show-bivector", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-paper", help="recompute every published claim and report")
    p.add_argument("--dim", type=int, default=3, choices=(1, 2, 3, 4), help="number of spatial dimensions n")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("demo", help="worked example")
    p.add_argument("family", choices=("galilea",))
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--a", default=None, help="comma-separated rationals")
    p.add_argument("--a0", default="0")
    p.add_argument("--kappa", default="1/4")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify-paper":
            out, code = cmd_verify(args)
        else:
            handler = {"solve": cmd_solve, "analyze": cmd_analyze, "bracket": cmd_bracket, "demo": cmd_demo}
            out, code = handler[args.command](args), 0
    except (UsageError, ParseError, DimensionError, ValueError, KeyError, TypeError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"galilea {args.command}: error: {msg}", file=sys.stderr)
        return 2
    print(out)
    return code
