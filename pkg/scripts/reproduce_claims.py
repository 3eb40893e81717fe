"""Run the claim registry for every supported n and print a status matrix.

    python scripts/reproduce_claims.py
"""

from galilea.report import REGISTRY, verify_claims

NS = (1, 2, 3, 4)


def main():
    reports = {n: verify_claims(n) for n in NS}
    width = max(len(claim) for claim, _, _ in REGISTRY)
    print(f"{'claim':<{width}}  " + "  ".join(f"n={n:<10}" for n in NS))
    for k, (claim, _, _) in enumerate(REGISTRY):
        print(f"{claim:<{width}}  " + "  ".join(f"{reports[n].checks[k].status:<12}" for n in NS))
    return max(r.exit_code for r in reports.values())


if __name__ == "__main__":
    raise SystemExit(main())
