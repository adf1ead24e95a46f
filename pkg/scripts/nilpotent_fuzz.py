"""Sweep random subalgebras of n and tally the pivot shape each one matches."""

import argparse
from collections import Counter

from g2sub.nilpotent import SchemaMismatch, fuzz_subalgebras, match_table10_schema


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=500)
    args = ap.parse_args()
    tally, misses = Counter(), 0
    for s in fuzz_subalgebras(args.seed, args.count):
        try:
            tally[match_table10_schema(s).row] += 1
        except SchemaMismatch as err:
            misses += 1
            print("unmatched:", err)
    for row in sorted(tally):
        print(f"row {row:2}: {tally[row]}")
    print(f"{args.count} samples, {len(tally)} rows hit, {misses} unmatched")
    raise SystemExit(1 if misses else 0)


if __name__ == "__main__":
    main()
