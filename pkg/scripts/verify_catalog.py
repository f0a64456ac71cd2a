#!/usr/bin/env python3
"""Run the full verify pipeline over every catalog descriptor.

Controls are expected to fail the square-size condition (exit 3);
everything else must verify cleanly (exit 0).  Any other outcome is a
regression and makes this script exit nonzero.
"""

import sys
import time

from chardual.catalog import CATALOG
from chardual.cli import main as cli_main

EXPECTED = {"control": 3}


def main() -> int:
    bad = 0
    for entry in CATALOG:
        want = 3 if "control" in entry.tags else 0
        t0 = time.perf_counter()
        rc = cli_main(["verify", entry.descriptor])
        dt = time.perf_counter() - t0
        status = "ok" if rc == want else f"UNEXPECTED rc={rc} (want {want})"
        print(f"{entry.descriptor:<24} order {entry.order:<6} rc={rc} {dt:6.1f}s  {status}",
              flush=True)
        if rc != want:
            bad += 1
    print(f"{len(CATALOG)} descriptors, {bad} unexpected results")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
