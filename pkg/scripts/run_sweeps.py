#!/usr/bin/env python3
"""Run every brute-force sweep at a chosen size and print the reports.

    python3 scripts/run_sweeps.py --max-len 8
"""
import argparse
import json

from biqp.oracle import SweepConfig, run_all


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-len", type=int, default=SweepConfig.max_len)
    p.add_argument("--max-cycle", type=int, default=SweepConfig.max_cycle)
    p.add_argument("--alphabet", type=int, default=SweepConfig.alphabet_size)
    p.add_argument("--json", action="store_true")
    a = p.parse_args()
    cfg = SweepConfig(alphabet_size=a.alphabet, max_len=a.max_len, max_cycle=a.max_cycle)
    reports = run_all(cfg)
    if a.json:
        print(json.dumps([r.as_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
            for d in r.discrepancies[:5]:
                print("   ", d)


if __name__ == "__main__":
    main()
