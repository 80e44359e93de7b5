"""Run verification suites and write one JSON record per suite (timings included)."""

import argparse
import json
import sys

from qqschur.verify import run_suite, suite_names


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=None, help="override every suite's default r")
    ap.add_argument("suites", nargs="*", help="suite names (default: all)")
    args = ap.parse_args()
    ok = True
    for name in args.suites or suite_names():
        res = run_suite(name, args.r)
        print(json.dumps(res.to_json()), flush=True)
        print(res.line(), file=sys.stderr, flush=True)
        ok &= res.passed
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
