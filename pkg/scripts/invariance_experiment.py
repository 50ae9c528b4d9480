#!/usr/bin/env python3
"""Randomized invariance experiment: seeded transforms against chosen germs.

Runs the right-covariance, unit-stability, and contact-invariance checks
with fresh random automorphisms and units, and writes the JSON report to
stdout.  Every trial is replayable from the printed seed.

Usage:
    python3 scripts/invariance_experiment.py --trials 50 --seed 3 --char 0
"""

import argparse
import json
import sys

from nashblowup.equivalence import DEFAULT_GERM_POOL, HarnessConfig, run_invariance_harness
from nashblowup.fields import CoefficientField
from nashblowup.polynomials import RingContext


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=50, help="trials per check kind")
    parser.add_argument("--contact-trials", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--char", type=int, default=0)
    parser.add_argument("--max-degree", type=int, default=3, help="tail degree of random transforms")
    parser.add_argument("--germs", default=",".join(DEFAULT_GERM_POOL))
    args = parser.parse_args()

    ring = RingContext(("x", "y"), CoefficientField(args.char))
    config = HarnessConfig(
        seed=args.seed,
        covariance_trials=args.trials,
        unit_trials=args.trials,
        contact_trials=args.contact_trials if args.contact_trials is not None else args.trials // 2,
        max_degree=args.max_degree,
    )
    report = run_invariance_harness(ring, config, germ_pool=tuple(args.germs.split(",")))
    report["seed"] = args.seed
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    print()
    failures = report["failures"]
    print(f"{len(report['checks'])} checks, {len(failures)} failures", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
