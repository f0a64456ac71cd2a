#!/usr/bin/env python3
"""Stretch run: the order-p^7 coclass-2 family, end to end.

Stages are timed and reported separately so a partial run still records
something useful: construction, brute-force class profile, character
table, then the transposability verdict.  Self-duality of this family is
an open conjecture, so the verdict line is the result, whichever way it
comes out.
"""

import argparse
import math
import sys
import time
from collections import Counter

from chardual.blocks import full_defect_check
from chardual.chartab import character_table
from chardual.families import coclass2_p7
from chardual.groups import ToolkitError, conjugacy_classes
from chardual.transpose import check_formally_transposable, tables_equivalent


def stage(label):
    print(f"--- {label}", flush=True)
    return time.perf_counter()


def done(t0):
    print(f"    ({time.perf_counter() - t0:.1f}s)", flush=True)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-p", type=int, default=5, help="prime >= 5 (default 5)")
    ap.add_argument("--skip-table", action="store_true",
                    help="stop after the class profile")
    args = ap.parse_args(argv)

    t0 = stage(f"build (p={args.p})")
    G = coclass2_p7(args.p)
    n = G.order
    print(f"    order {n} = {args.p}^7: {'ok' if n == args.p ** 7 else 'MISMATCH'}")
    done(t0)

    t0 = stage("conjugacy classes")
    cd = conjugacy_classes(G)
    profile = Counter(cd.sizes)
    print(f"    k = {len(cd.sizes)} classes; profile {dict(sorted(profile.items()))}")
    squares = all(math.isqrt(s) ** 2 == s for s in profile)
    print(f"    all class sizes square: {squares}")
    done(t0)
    if args.skip_table:
        return 0

    t0 = stage("character table")
    X = character_table(G)
    print(f"    degrees {dict(sorted(Counter(X.degrees).items()))}, conductor {X.conductor}")
    done(t0)

    t0 = stage("transposability")
    rep = check_formally_transposable(X)
    print(f"    formal verdict: {rep.verdict}")
    if rep.formally_transposable:
        try:
            eq = tables_equivalent(X, rep.transpose_table)
        except ToolkitError as e:
            print(f"    self-realization search aborted: {e}")
            eq = None
        if eq is not None:
            print("    verdict: RealizedBy(self); the self-duality conjecture holds here")
        else:
            print("    verdict: FormallyTransposable; no self-equivalence found")
        defect = full_defect_check(X, args.p, formal=rep)
        print(f"    blocks at p={args.p}: full defect {defect.ok} "
              f"(defects {set(defect.partition.defects)})")
    done(t0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
