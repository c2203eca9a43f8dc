#!/usr/bin/env python3
"""Print witness reports for every admissible shape at small degree.

Walks the partitions of n for the chosen variant, builds the witness
where the construction applies, and prints the substitution diagram and
the symmetrized value.
"""

import argparse

from semigraded.cochar import (
    apply_symmetrizer,
    build_witness,
    format_witness_report,
    partitions_of,
)
from semigraded.errors import HypothesisViolated
from semigraded.gralgebra import paper_catalog


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--variant", choices=["T1", "T3"], default="T3")
    ap.add_argument("--n", type=int, default=6)
    args = ap.parse_args()

    alg = paper_catalog("thm_T1_fractional" if args.variant == "T1"
                        else "thm_T3_fractional")
    admissible = skipped = 0
    for lam in partitions_of(args.n):
        try:
            data = build_witness(args.variant, lam, alg=alg)
        except HypothesisViolated as exc:
            skipped += 1
            print(f"-- {lam.parts}: outside the construction ({exc})\n")
            continue
        admissible += 1
        value = apply_symmetrizer(alg, data.tableau, data.f, data.tau)
        print(format_witness_report(alg, data, value))
        print()
    print(f"{admissible} shapes certified, {skipped} outside the construction")


if __name__ == "__main__":
    main()
