"""Reproduce the worked example: chi=6, per-level supports 0.36/0.3/0.2/0.16, compat arithmetic.

    python scripts/run_worked_example.py [--mode exact] [--descent all]
"""

import argparse
import sys

from fuzzmine import EXAMPLE_TAXONOMY, EXAMPLE_TRANSACTIONS
from fuzzmine.cli import run


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--mode", default="compat", choices=["compat", "exact"])
    p.add_argument("--descent", default="frequent-descendants", choices=["all", "frequent-descendants"])
    p.add_argument("--format", default="text", choices=["text", "json", "csv"])
    args = p.parse_args()
    sys.exit(
        run(
            [
                "--taxonomy", str(EXAMPLE_TAXONOMY),
                "--transactions", str(EXAMPLE_TRANSACTIONS),
                "--chi", "6",
                "--min-support", "1:0.36", "--min-support", "2:0.3",
                "--min-support", "3:0.2", "--min-support", "4:0.16",
                "--mode", args.mode, "--descent", args.descent, "--format", args.format,
            ]
        )
    )


if __name__ == "__main__":
    main()
