#!/usr/bin/env python3
"""Sweep the local classifier over (alpha, p^(3l)) grids and tabulate.

Every beta = p^(3l) must come out split; the script also scans beta = pi^m
for m not divisible by 3 to show where division algebras actually live.
"""

import argparse
from collections import Counter

from symbalg.eisenstein import ONE, EisensteinInt, factor_rational_prime
from symbalg.intmath import primes_below
from symbalg.local import LocalAlgebraSpec, classify, classify_report, power_spec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pmax", type=int, default=200)
    ap.add_argument("--alphas", type=int, nargs="*", default=list(range(2, 21)))
    ap.add_argument("--ls", type=int, nargs="*", default=[1, 2, 3])
    args = ap.parse_args()

    verdicts = Counter()
    cases = Counter()
    for p in primes_below(args.pmax):
        if p <= 3:
            continue
        for l in args.ls:
            for alpha in args.alphas:
                if alpha % p == 0:
                    continue
                report = classify_report(power_spec(EisensteinInt(alpha), p, l))
                verdicts[report["verdict"]] += 1
                cases[(report["f"], report["m"] % 3)] += 1
    print(f"beta = p^(3l) sweep over p < {args.pmax}: {dict(verdicts)}")
    print("  (f, m mod 3) histogram:", dict(sorted(cases.items())))

    division = Counter()
    for p in primes_below(args.pmax):
        if p <= 3:
            continue
        prime = factor_rational_prime(p)
        for alpha in args.alphas:
            if alpha % p == 0:
                continue
            for m in (1, 2, 4, 5):
                spec = LocalAlgebraSpec(EisensteinInt(alpha), prime.pi**m, ONE, prime)
                division[classify(spec).outcome] += 1
    print(f"beta = pi^m, 3 does not divide m: {dict(division)}")
    print("  division happens exactly when the cubic symbol is primitive (f = 3)")


if __name__ == "__main__":
    main()
