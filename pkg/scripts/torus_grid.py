"""Reconnection data for the torus knot grid.

For each coprime (p, q) prints c, s, the positive-diagram value c - s + 1,
the closed form (p-1)(q-1), the signature lower bound and the Seifert genus.

    python3 scripts/torus_grid.py --max 7
"""

import argparse
import math
from dataclasses import dataclass

from knotrecon.braids import braid_closure, torus_braid
from knotrecon.invariants import braid_invariants, reconnection_number_positive
from knotrecon.seifert import seifert_circles, seifert_genus


@dataclass
class GridConfig:
    low: int = 2
    high: int = 6
    with_signature: bool = True


def rows(cfg: GridConfig):
    for p in range(cfg.low, cfg.high + 1):
        for q in range(p + 1, cfg.high + 1):
            if math.gcd(p, q) != 1:
                continue
            b = torus_braid(p, q)
            d = braid_closure(b)
            sig = braid_invariants(b)[1] if cfg.with_signature else None
            yield {"p": p, "q": q, "c": d.c, "s": seifert_circles(d).count,
                   "R": reconnection_number_positive(d), "closed_form": (p - 1) * (q - 1),
                   "sigma": sig, "genus": seifert_genus(d).genus}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min", type=int, default=2)
    ap.add_argument("--max", type=int, default=6)
    ap.add_argument("--no-signature", action="store_true",
                    help="skip the Seifert-matrix signature (slow for large p, q)")
    args = ap.parse_args()
    cfg = GridConfig(args.min, args.max, not args.no_signature)
    print(f"{'p':>3} {'q':>3} {'c':>4} {'s':>3} {'R':>4} {'(p-1)(q-1)':>10} {'sigma':>6} {'g':>3}")
    for r in rows(cfg):
        flag = "" if r["R"] == r["closed_form"] else "  MISMATCH"
        sig = "-" if r["sigma"] is None else r["sigma"]
        print(f"{r['p']:>3} {r['q']:>3} {r['c']:>4} {r['s']:>3} {r['R']:>4} "
              f"{r['closed_form']:>10} {sig:>6} {r['genus']:>3}{flag}")


if __name__ == "__main__":
    main()
