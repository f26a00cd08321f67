"""How few crossing-local reconnections turn the stevedore knot into an
unlink, and into a single unknot.

Explores every single smoothing of the table diagram, reports which ones
leave a two-component diagram that R1/R2 simplification reduces to two
free loops, then runs the full search.

    python3 scripts/stevedore_search.py
"""

import argparse

from knotrecon.braids import braid_closure, table_braid
from knotrecon.diagram import component_count, serialize_pd
from knotrecon.reconnection import reduce_r1_r2, search_reconnections, smooth_crossing


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--knot", default="6_1")
    args = ap.parse_args()
    d = braid_closure(table_braid(args.knot))
    print(f"{args.knot}: {serialize_pd(d)}")
    for k in range(d.c):
        after = smooth_crossing(d, k)
        reduced = reduce_r1_r2(after)
        unlinked = reduced.c == 0 and reduced.free_loops == 2
        print(f"  smooth {k}: mu={component_count(after)} -> reduced c={reduced.c} "
              f"loops={reduced.free_loops}{'  unlink' if unlinked else ''}")
    n, trace = search_reconnections(d)
    print(f"search: {n} reconnections")
    for s in trace.steps:
        print(f"  {s.kind:<7} site={list(s.site)} mu={s.components_after} c={s.crossings_after}")


if __name__ == "__main__":
    main()
