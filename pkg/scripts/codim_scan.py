#!/usr/bin/env python3
"""Scan graded codimension sequences across the catalog.

Computes c_1..c_N for the interesting catalog algebras in modular mode,
prints the per-n values with n-th roots, and cross-checks the two
degree-7 algebras against each other termwise.
"""

import argparse
import sys

from semigraded.codim import codim_sequence, exponent_estimate
from semigraded.gralgebra import parse_catalog_spec

DEFAULT_TARGETS = [
    "thm_T1_fractional",
    "thm_T2_fractional",
    "thm_T3_fractional",
    "mk_column_graded(2)",
    "utk_column_graded(2)",
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--targets", nargs="*", default=DEFAULT_TARGETS)
    args = ap.parse_args()

    sequences = {}
    for spec in args.targets:
        alg = parse_catalog_spec(spec)
        seq = codim_sequence(alg, args.n_max, seed=args.seed)
        sequences[spec] = [r.value for r in seq]
        est = exponent_estimate([r.value for r in seq])
        print(f"{spec}  (dim {alg.dim})")
        for r, root in zip(seq, est["roots"]):
            print(f"  n={r.n}: c_n={r.value}  root={root:.4f}  [{r.certification}]  "
                  f"{r.seconds:.2f}s")
        print(f"  log-slope {est['slope']:.4f}")

    a = sequences.get("thm_T1_fractional")
    b = sequences.get("thm_T2_fractional")
    if a and b:
        ok = a == b
        print(f"degree-7 sequences agree termwise: {ok}")
        if not ok:
            sys.exit(1)


if __name__ == "__main__":
    main()
