"""Print every regular subalgebra type with its dimension, radical and Levi factor."""

import argparse
from collections import Counter

from g2sub.expr import format_element
from g2sub.algebra import root_vector
from g2sub.regular import classify_regular_types


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", type=int, help="only this dimension")
    args = ap.parse_args()
    classes = classify_regular_types()
    for c in classes:
        if args.dim is not None and c.dimension != args.dim:
            continue
        spec = c.canonical_spec
        roots = " ".join(format_element(root_vector(r)) for r in spec.roots) or "-"
        print(f"dim {c.dimension:2}  L={spec.l_type.value:5} levi {c.levi_dim:2} radical {c.radical_dim:2}  {roots}")
    counts = Counter(c.dimension for c in classes)
    print("per dimension:", ", ".join(f"{d}:{n}" for d, n in sorted(counts.items())))
    print("total:", len(classes))


if __name__ == "__main__":
    main()
