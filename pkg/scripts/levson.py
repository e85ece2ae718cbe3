#!/usr/bin/env python3
"""Scan primes p = 2a(a-1)+1 for the binomial congruence
C(a^2-1, n-1+a) == (-1)^(n-1) C(a^2-1, a) mod p with 1 < n <= a."""

import argparse
import time

from mucrit.search import levson_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--alpha-max", type=int, default=3000)
    ap.add_argument("--threads", type=int, default=1)
    ns = ap.parse_args()
    t0 = time.time()
    res = levson_scan(ns.alpha_max, threads=ns.threads)
    print(f"primes scanned: {res.counts['primes_scanned']}")
    for p, alpha, n in res.witnesses:
        print(f"  hit: p={p}  alpha={alpha}  n={n}")
    print(f"elapsed: {res.elapsed:.1f}s (wall {time.time() - t0:.1f}s)")


if __name__ == "__main__":
    main()
