#!/usr/bin/env python3
"""Count couples per class and per length, and list a few of each.

    python3 scripts/classify_census.py --max-len 7 --alphabet 2 --show 3
"""
import argparse
import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass

from biqp.relations import classify
from biqp.words import alphabet


@dataclass(frozen=True)
class Config:
    max_len: int = 7
    alphabet_size: int = 2
    show: int = 3


def census(cfg: Config):
    letters = alphabet(cfg.alphabet_size)
    counts = defaultdict(Counter)
    samples = defaultdict(list)
    for n in range(1, cfg.max_len + 1):
        ws = ["".join(t) for t in itertools.product(letters, repeat=n)]
        for q, r in itertools.permutations(ws, 2):
            tag = classify(q, r).tag.value
            counts[n][tag] += 1
            if len(samples[tag]) < cfg.show and n >= 3:
                samples[tag].append((q, r))
    return counts, samples


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-len", type=int, default=Config.max_len)
    p.add_argument("--alphabet", type=int, default=Config.alphabet_size)
    p.add_argument("--show", type=int, default=Config.show)
    a = p.parse_args()
    counts, samples = census(Config(a.max_len, a.alphabet, a.show))
    tags = ["incompatible", "implies-quasiperiodicity", "compatible-only"]
    print(f"{'len':>3} " + " ".join(f"{t:>24}" for t in tags))
    for n in sorted(counts):
        print(f"{n:>3} " + " ".join(f"{counts[n][t]:>24}" for t in tags))
    for t in tags:
        print(t, samples[t])


if __name__ == "__main__":
    main()
