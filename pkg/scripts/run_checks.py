#!/usr/bin/env python3
"""Run the full invariant suite and report per-check results.

Exits nonzero if any check fails.  The sample count trades runtime for
coverage of the multiplication rank bound checks (200 per configuration type
takes around fifteen seconds).
"""

import argparse
import sys
import time

from sixpoints import run_invariant_suite

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=200)
    args = parser.parse_args()
    start = time.time()
    report = run_invariant_suite(seed=args.seed, samples_per_type=args.samples)
    for check in report.checks:
        print(f"{'PASS' if check.passed else 'FAIL'} {check.name}: {check.detail}")
    print(f"{'all checks passed' if report.passed else 'FAILURES PRESENT'} "
          f"({time.time() - start:.1f}s, seed {report.seed})")
    sys.exit(0 if report.passed else 1)
