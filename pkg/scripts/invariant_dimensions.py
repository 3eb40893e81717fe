"""Tabulate invariant-form dimensions and antisymmetric ranks for n = 1..4.

    python scripts/invariant_dimensions.py [--max-n 4] [--seed 0]
"""

import argparse
import random

from galilea.forms import rank_report, galilean_form, split
from galilea.groups import boost_algebra_generators, boost_family, rotation_algebra_generators
from galilea.invariants import InvarianceProblem, solve_invariant_forms
from galilea.sampling import random_galilean_parameters


def families(n):
    return {
        "boosts (group)": [boost_family(n)],
        "boosts (algebra)": boost_algebra_generators(n),
        "rotations": rotation_algebra_generators(n),
        "boosts + rotations": [boost_family(n)] + rotation_algebra_generators(n),
    }


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)

    names = list(families(1))
    print("n  " + "  ".join(f"{k:>18}" for k in names) + "  antisym rank  radical")
    for n in range(1, args.max_n + 1):
        dims = [len(solve_invariant_forms(InvarianceProblem(n + 1, fams))) for fams in families(n).values()]
        rep = rank_report(split(galilean_form(random_galilean_parameters(rng, n)))[1])
        print(f"{n}  " + "  ".join(f"{d:>18}" for d in dims) + f"  {rep.rank:>12}  {len(rep.radical_basis):>7}")


if __name__ == "__main__":
    main()
