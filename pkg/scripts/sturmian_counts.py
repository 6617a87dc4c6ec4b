#!/usr/bin/env python3
"""Tabulate Q(n), the bispecial factor and the Rauzy decomposition per length.

    python3 scripts/sturmian_counts.py --directive 1,1,1,1,1,1,1,1,1,1,1,1 --max-n 33
"""
import argparse
from dataclasses import dataclass

from biqp.errors import NeedsLongerDirectiveError
from biqp.sturmian import SturmLang, qp_by_oracle, rauzy_graph, shortest_bispecial_at_least, sturmian_quasiperiods


@dataclass(frozen=True)
class Config:
    directive: tuple = (1,) * 24
    max_n: int = 33
    check_oracle: bool = True


def rows(cfg: Config):
    lang = SturmLang(cfg.directive)
    for n in range(1, cfg.max_n + 1):
        try:
            qs = sturmian_quasiperiods(lang, n)
            k, l, m = rauzy_graph(lang, n).decomposition
            s = shortest_bispecial_at_least(lang, n)
            agree = qp_by_oracle(lang, n) == qs if cfg.check_oracle else None
        except NeedsLongerDirectiveError:
            print(f"# stopping at n={n}: directive too short")
            return
        yield n, len(qs), len(s), (k, l, m), agree


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--directive", default=",".join(["1"] * 24))
    p.add_argument("--max-n", type=int, default=33)
    p.add_argument("--no-oracle", action="store_true")
    a = p.parse_args()
    cfg = Config(tuple(int(x) for x in a.directive.split(",")), a.max_n, not a.no_oracle)
    print(f"{'n':>3} {'Q(n)':>5} {'|s|':>4} {'k,l,m':>10} oracle")
    for n, count, ls, klm, agree in rows(cfg):
        print(f"{n:>3} {count:>5} {ls:>4} {','.join(map(str, klm)):>10} {'-' if agree is None else agree}")


if __name__ == "__main__":
    main()
