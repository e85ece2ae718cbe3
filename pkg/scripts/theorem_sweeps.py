#!/usr/bin/env python3
"""Desk-scale sweeps: difference-set classes for p <= 200, sumset
decompositions and three-summand checks for p <= 61.  Prints every witness
class found and flags anything a theorem says should not exist."""

import argparse
import time

from mucrit.fp import is_prime
from mucrit.search import diffset_search, sumset_search, threefold_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--diffset-max-p", type=int, default=200)
    ap.add_argument("--sumset-max-p", type=int, default=61)
    ap.add_argument("--threads", type=int, default=1)
    ns = ap.parse_args()

    t0 = time.time()
    print("== difference sets ==")
    for p in range(3, ns.diffset_max_p + 1):
        if not is_prime(p):
            continue
        for d in range(2, p - 1):
            if (p - 1) % d:
                continue
            res = diffset_search(p, d, threads=ns.threads)
            for elems, exact in res.witnesses:
                tag = "exact" if exact else "strict"
                print(f"  p={p:3d} d={d:3d}  {tag:6s}  {elems}")
            for v in res.violations:
                print(f"  !! p={p} d={d}: {v}")

    print("== sumset decompositions ==")
    for p in range(3, ns.sumset_max_p + 1):
        if not is_prime(p):
            continue
        for d in range(2, p - 1):
            if (p - 1) % d:
                continue
            res = sumset_search(p, d, threads=ns.threads)
            for A, B in res.witnesses:
                print(f"  p={p:3d} d={d:3d}  A={A} B={B}")
            for v in res.violations:
                print(f"  !! p={p} d={d}: {v}")

    print("== three-summand checks ==")
    found = 0
    for p in range(3, ns.sumset_max_p + 1):
        if not is_prime(p):
            continue
        for d in range(2, p - 1):
            if (p - 1) % d:
                continue
            res = threefold_check(p, d, threads=ns.threads)
            found += len(res.witnesses)
            for w in res.witnesses:
                print(f"  !! p={p} d={d}: {w}")
    print(f"  three-summand decompositions found: {found}")
    print(f"total elapsed: {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
