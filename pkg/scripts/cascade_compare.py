"""Compare cascade policies with the exhaustive search and the bounds.

For each knot the script runs the random policy over several seeds, the
planned and greedy-split policies once, and the breadth-first search, and
prints the costs next to the certified interval.

    python3 scripts/cascade_compare.py --seeds 20
"""

import argparse
import statistics
from dataclasses import dataclass, field

from knotrecon.braids import braid_closure, table_braid, torus_braid
from knotrecon.errors import BudgetExceeded
from knotrecon.invariants import reconnection_bounds
from knotrecon.reconnection import cascade, search_reconnections

# known unknotting numbers, used only as upper-bound certificates
UNKNOTTING = {"3_1": 1, "4_1": 1, "5_1": 2, "5_2": 1, "6_1": 1, "6_2": 1, "6_3": 1, "7_1": 3}


@dataclass
class CompareConfig:
    knots: list = field(default_factory=lambda: sorted(UNKNOTTING))
    seeds: int = 10
    budget: int = 200_000


def compare(name, b, cfg):
    d = braid_closure(b)
    bounds = reconnection_bounds(d, b, UNKNOTTING.get(name))
    rand = [cascade(d, "random", seed=s).total_reconnections for s in range(cfg.seeds)]
    try:
        found = search_reconnections(d, cfg.budget)[0]
    except BudgetExceeded:
        found = None
    return {"name": name, "c": d.c, "lower": bounds.lower, "upper": bounds.upper,
            "random_mean": statistics.mean(rand), "random_min": min(rand),
            "planned": cascade(d, "planned").total_reconnections,
            "greedy": cascade(d, "greedy-split").total_reconnections,
            "search": found}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--budget", type=int, default=200_000)
    ap.add_argument("--torus", nargs=2, type=int, action="append", default=[],
                    metavar=("P", "Q"), help="add a torus knot (repeatable)")
    args = ap.parse_args()
    cfg = CompareConfig(seeds=args.seeds, budget=args.budget)
    jobs = [(n, table_braid(n)) for n in cfg.knots]
    jobs += [(f"T({p},{q})", torus_braid(p, q)) for p, q in args.torus]
    print(f"{'knot':<8} {'c':>3} {'bounds':>8} {'random':>12} {'planned':>8} "
          f"{'greedy':>7} {'search':>7}")
    for name, b in jobs:
        r = compare(name, b, cfg)
        search = "-" if r["search"] is None else r["search"]
        print(f"{r['name']:<8} {r['c']:>3} {r['lower']:>3}..{r['upper']:<3} "
              f"{r['random_mean']:>6.1f} ({r['random_min']:>2}) {r['planned']:>8} "
              f"{r['greedy']:>7} {search:>7}")


if __name__ == "__main__":
    main()
