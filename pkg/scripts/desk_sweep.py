"""Run the rigidity oracle over the finite corpus and tabulate the verdicts
next to the class checker.

    python scripts/desk_sweep.py [--max-order 200]
"""

import argparse
import time

from coxrig import corpus
from coxrig.finite_type import coxeter_order
from coxrig.group_engine import todd_coxeter
from coxrig.oracle import Limits, construct_psi, rigidity_verdict, standard_system
from coxrig.rigidity_class import check_class_membership


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=200)
    args = ap.parse_args()
    limits = Limits(max_order=args.max_order)

    print(f"{'matrix':14} {'|W|':>5} {'class':>6} {'rigid':>6} {'systems':>8}  classes")
    for name, m in sorted(corpus.FINITE.items(), key=lambda kv: coxeter_order(kv[1])):
        order = coxeter_order(m)
        if order > args.max_order:
            continue
        t0 = time.perf_counter()
        v = rigidity_verdict(m, limits)
        in_class = check_class_membership(m).in_class
        if in_class:
            real = todd_coxeter(m)
            std = standard_system(real, m)
            for cand in v.candidates:
                construct_psi(real, std, cand)  # raises on failure
        classes = ", ".join(" x ".join(c.labels) for c in v.classes)
        flag = "" if not in_class or v.rigid else "  <-- counterexample?"
        print(f"{name:14} {order:5} {str(in_class):>6} {str(v.rigid):>6} {len(v.candidates):8}  "
              f"{classes}  [{time.perf_counter() - t0:.2f}s]{flag}")


if __name__ == "__main__":
    main()
