"""Print brackets of all coordinate pairs and a few sample observables.

    python scripts/bracket_table.py --a 1,2,3 [--kappa 1/4] [--f "x1*t^2"]
"""

import argparse

from galilea.exact import rational_parse
from galilea.forms import GalileanParameters
from galilea.poisson import bracket, galilean_structure
from galilea.poly import Polynomial, observable_variables, poly_parse


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--a", default="1,2,3")
    parser.add_argument("--kappa", default="1/4")
    parser.add_argument("--f", action="append", default=[])
    args = parser.parse_args()

    a = tuple(rational_parse(x) for x in args.a.split(","))
    n = len(a)
    s = galilean_structure(GalileanParameters(a, 0), rational_parse(args.kappa))
    vs = observable_variables(n)
    obs = [(v, Polynomial.variable(v, vs)) for v in vs]
    obs += [(f, poly_parse(f, vs)) for f in args.f]

    width = max(len(name) for name, _ in obs)
    for name_f, f in obs:
        for name_g, g in obs:
            print(f"{{{name_f:>{width}}, {name_g:<{width}}}} = {bracket(s, f, g)}")


if __name__ == "__main__":
    main()
