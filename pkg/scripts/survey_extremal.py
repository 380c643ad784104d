#!/usr/bin/env python3
"""Sweep the exhaustive small-2-tree corpus and print one JSON summary per n.

Usage:
    python scripts/survey_extremal.py [--n-min 4] [--n-max 8]

Each line reports the minimum and maximum spanning-tree counts over every
distinct labeled 2-tree with a fixed base edge, whether all minimizers are
books, and whether all maximizers have exactly two degree-2 vertices.
"""

from __future__ import annotations

import argparse
import json
import time

from twotrees import count_book, count_two_simplicial, survey_extremal


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-min", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=8)
    args = parser.parse_args()

    for n in range(args.n_min, args.n_max + 1):
        t0 = time.perf_counter()
        summary = survey_extremal(n)
        payload = summary.to_json()
        payload["elapsed_s"] = round(time.perf_counter() - t0, 3)
        payload["min_matches_book_formula"] = summary.min_count == count_book(n)
        payload["max_matches_fibonacci"] = summary.max_count == count_two_simplicial(n)
        print(json.dumps(payload, sort_keys=True))


if __name__ == "__main__":
    main()
