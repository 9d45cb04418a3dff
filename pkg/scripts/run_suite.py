#!/usr/bin/env python3
"""Run the equation table and print one verdict line per law."""

import argparse
import sys

from linkalg.equations import format_results, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-m", "--model", choices=("c", "m"), default=None,
                    help="restrict to one model (default: both)")
    args = ap.parse_args()
    results = run_suite(args.model)
    for line in format_results(results):
        print(line)
    bad = sum(1 for r in results if not r.ok)
    print(f"{len(results) - bad}/{len(results)} rows as expected")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
