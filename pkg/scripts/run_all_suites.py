"""Run every verification suite and write one JSON report.

    python scripts/run_all_suites.py --max-n 7 --jobs 4 --out results/suites.json
"""

import argparse
import json
from pathlib import Path

from majd.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=None, help="override each suite's default bound")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results/suites.json"))
    args = ap.parse_args()

    report = []
    for name in SUITES:
        res = run_suite(name, args.max_n, args.jobs)
        print(f"{'PASS' if res.passed else 'FAIL'} {name:24s} checked={res.checked} "
              f"failures={res.failures} {res.seconds:.2f}s")
        report.append({"suite": name, **res.to_record()})
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    print("wrote", args.out)


if __name__ == "__main__":
    main()
