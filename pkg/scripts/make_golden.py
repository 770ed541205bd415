"""Regenerate the CLI golden files under tests/fixtures/.

Run after an intentional output-format change, then review the diff.
"""

import contextlib
import io
import json
from pathlib import Path

from majd.cli import main

FIXTURES = Path(__file__).resolve().parents[1] / "tests" / "fixtures"

GOLDEN = {
    "enumerate_32": ["enumerate", "--shape", "3,2"],
    "trace_worked_d8": ["trace", "--d", "8", "1,2,5/3,6,7/4,8,9"],
    "trace_ref333_d4": ["trace", "--d", "4", "1,2,4/3,5,7/6,8,9"],
    "dist_333_majd4": ["dist", "--shape", "3,3,3", "--stat", "majd_tab", "--d", "4", "--no-cache"],
    "stat_worked_inv_hs": ["stat", "--stat", "inv_hs", "1,2,5/3,6,7/4,8,9"],
}


def run_json(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv + ["--format", "json"])
    record = json.loads(buf.getvalue())
    record.pop("seconds")
    return code, record


if __name__ == "__main__":
    for name, argv in GOLDEN.items():
        code, record = run_json(argv)
        assert code == 0, (name, code)
        (FIXTURES / f"{name}.json").write_text(json.dumps(record, indent=2, sort_keys=True) + "\n")
        print("wrote", name)
