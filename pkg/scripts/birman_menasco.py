"""Invariants and a budgeted search for a Birman-Menasco pair.

The two closures are transversally distinct, yet self-linking, component
count and Alexander polynomial agree, so search can only time out.
"""

import argparse

from transmarkov.alexander import alexander_poly, format_poly
from transmarkov.braid import BraidWord, components, self_linking
from transmarkov.search import SearchBudget, search


def pair(p, q, r):
    k1 = BraidWord(3, (1,) * (2 * p + 1) + (2,) * (2 * q) + (1,) * (2 * r) + (-2,))
    k2 = BraidWord(3, (1,) * (2 * p + 1) + (-2,) + (1,) * (2 * r) + (2,) * (2 * q))
    return k1, k2


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("p", type=int, nargs="?", default=2)
    ap.add_argument("q", type=int, nargs="?", default=2)
    ap.add_argument("r", type=int, nargs="?", default=3)
    ap.add_argument("--max-seconds", type=float, default=120.0)
    ap.add_argument("--max-nodes", type=int, default=200_000)
    args = ap.parse_args()

    k1, k2 = pair(args.p, args.q, args.r)
    for name, k in (("K1", k1), ("K2", k2)):
        print(f"{name} {k}: sl={self_linking(k)} components={components(k)} "
              f"alexander={format_poly(alexander_poly(k))}")
    out = search(k1, k2, SearchBudget(max_nodes=args.max_nodes, max_seconds=args.max_seconds))
    print(f"search: {out.status} after {out.nodes_tried} nodes, {out.elapsed:.1f}s ({out.reason})")


if __name__ == "__main__":
    main()
