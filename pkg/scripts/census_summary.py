"""Count class membership and evenness over all matrices of a given rank.

    python scripts/census_summary.py --rank 3 --labels 2,3,4,5,6,inf
"""

import argparse
from collections import Counter

from coxrig.cli import _labels, census_records


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--labels", type=_labels, default=_labels("2,3,4,5,6,inf"))
    args = ap.parse_args()

    counts = Counter()
    for rec in census_records(args.rank, args.labels):
        counts[(rec["evenness"], rec["in_class"])] += 1
    total = sum(counts.values())
    print(f"rank {args.rank}: {total} matrices")
    for (evenness, in_class), n in sorted(counts.items()):
        print(f"  {evenness:16} in_class={in_class!s:5} {n:7}  ({100 * n / total:.1f}%)")


if __name__ == "__main__":
    main()
