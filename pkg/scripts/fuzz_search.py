"""Measure how often search reconnects pairs produced by random transversal moves."""

import argparse
import random
import time

from transmarkov.garside import ConjugacyEngine
from transmarkov.moves import verify_certificate
from transmarkov.search import SearchBudget, fuzz_pair, search


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--moves", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-seconds", type=float, default=30.0)
    args = ap.parse_args()

    engine = ConjugacyEngine(500)
    budget = SearchBudget(max_seconds=args.max_seconds)
    found = 0
    t0 = time.monotonic()
    for i in range(args.trials):
        rng = random.Random(args.seed * 100_003 + i)
        a, b, steps = fuzz_pair(rng, moves=args.moves, engine=engine)
        out = search(a, b, budget)
        ok = out.found and bool(verify_certificate(out.certificate))
        found += ok
        if not ok:
            print(f"trial {i}: {out.status} {a} -> {b} ({len(steps)} moves applied)")
    rate = found / args.trials
    print(f"{found}/{args.trials} reconnected ({rate:.1%}) in {time.monotonic() - t0:.0f}s")


if __name__ == "__main__":
    main()
