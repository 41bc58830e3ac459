#!/usr/bin/env python3
"""Run every verification suite over a grid of instances and tabulate results.

Writes one JSON report file per instance into the output directory and
prints a summary table. Instances where a check trips a size guard show as
'refused' rather than failing.

    python scripts/run_verification_grid.py --max-m 3 --max-n 5 --out-dir reports
"""

import argparse
import json
import os
import sys
import tempfile

from genlink import LinkInstance
from genlink.verify import VerifyBounds, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--Lmax", type=int, default=2)
    parser.add_argument("--rmax", type=int, default=2)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=100)
    parser.add_argument("--out-dir", default=None)
    args = parser.parse_args()

    bounds = VerifyBounds(
        symbolic_upto=args.Lmax,
        square_colon_rmax=args.rmax,
        witness_samples=args.samples,
    )
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)

    suite_names = None
    rows = []
    any_fail = False
    for m in range(1, args.max_m + 1):
        for n in range(m, args.max_n + 1):
            inst = LinkInstance(m, n)
            reports = run_suite(
                "all", inst, bounds,
                upto=args.Lmax, r_max=args.rmax, seed=args.seed, samples=args.samples,
            )
            if suite_names is None:
                suite_names = [r.check for r in reports]
            rows.append(((m, n), {r.check: r.status for r in reports}))
            any_fail |= any(r.status == "fail" for r in reports)
            if args.out_dir:
                path = os.path.join(args.out_dir, f"verify_{m}_{n}.json")
                payload = json.dumps(
                    {"schema_version": 1, "reports": [r.to_dict() for r in reports]},
                    indent=2, sort_keys=True,
                ) + "\n"
                fd, tmp = tempfile.mkstemp(dir=args.out_dir, prefix=".tmp-")
                with os.fdopen(fd, "w") as handle:
                    handle.write(payload)
                os.replace(tmp, path)

    width = max(len(s) for s in suite_names) + 1
    print("instance " + "".join(f"{s:>{width}}" for s in suite_names))
    marks = {"pass": "ok", "fail": "FAIL", "refused": "ref"}
    for (m, n), statuses in rows:
        cells = "".join(f"{marks[statuses[s]]:>{width}}" for s in suite_names)
        print(f"({m},{n})   " + cells)
    return 1 if any_fail else 0


if __name__ == "__main__":
    sys.exit(main())
