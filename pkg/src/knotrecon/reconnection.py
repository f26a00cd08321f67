"""Reconnection moves on diagrams: oriented smoothings, free-loop merges,
unknotting plans, the crossing-switch gadget, cascades, and an exhaustive
search for short reconnection sequences."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .diagram import (
    LinkDiagram,
    assemble,
    canonical_key,
    is_connected,
    parse_pd,
    serialize_pd,
    writhe,
)
from .errors import (
    BudgetExceeded,
    DisconnectedDiagram,
    IndexOutOfRange,
    InvalidPlan,
    NotFreeLoops,
    SameCircle,
    StepBudgetExceeded,
)
from .seifert import seifert_graph

__all__ = [
    "Verdict",
    "Step",
    "CascadeTrace",
    "ReconnectionPlan",
    "smooth_crossing",
    "merge_circles",
    "reduce_r1_r2",
    "verify_unknot",
    "plan_unknotting",
    "apply_plan",
    "crossing_switch_gadget",
    "cascade",
    "search_reconnections",
    "min_reconnections_search",
    "POLICIES",
]

POLICIES = ("random", "planned", "greedy-split")


class Verdict(str, enum.Enum):
    CONFIRMED = "confirmed"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Step:
    kind: str                 # smooth | merge | switch-gadget | reduce
    site: tuple[int, ...]     # crossing index, or the two merged loops
    sign: int                 # sign of the smoothed/switched crossing, else 0
    components_after: int
    writhe_after: int
    crossings_after: int

    @property
    def cost(self) -> int:
        return {"smooth": 1, "merge": 1, "switch-gadget": 2}.get(self.kind, 0)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "site": list(self.site), "sign": self.sign,
                "components_after": self.components_after,
                "writhe_after": self.writhe_after, "crossings_after": self.crossings_after}

    @classmethod
    def from_dict(cls, data: dict) -> "Step":
        return cls(data["kind"], tuple(data["site"]), data["sign"], data["components_after"],
                   data["writhe_after"], data["crossings_after"])


@dataclass(frozen=True)
class CascadeTrace:
    initial: LinkDiagram
    steps: tuple[Step, ...]
    final: LinkDiagram
    complete: bool = True

    @property
    def total_reconnections(self) -> int:
        return sum(s.cost for s in self.steps)

    def to_dict(self) -> dict:
        return {"initial": serialize_pd(self.initial),
                "steps": [s.to_dict() for s in self.steps],
                "total_reconnections": self.total_reconnections,
                "final": serialize_pd(self.final),
                "complete": self.complete}

    @classmethod
    def from_dict(cls, data: dict) -> "CascadeTrace":
        trace = cls(parse_pd(data["initial"]), tuple(Step.from_dict(s) for s in data["steps"]),
                    parse_pd(data["final"]), data.get("complete", True))
        if trace.total_reconnections != data["total_reconnections"]:
            raise ValueError("total_reconnections does not match the steps")
        return trace

    def step_lines(self) -> Iterable[dict]:
        """One record per step, for line-delimited streaming."""
        for i, s in enumerate(self.steps):
            yield {"step": i, **s.to_dict()}


@dataclass(frozen=True)
class ReconnectionPlan:
    keep: frozenset[int]
    smooth_order: tuple[int, ...]

    @property
    def claimed_cost(self) -> int:
        return len(self.smooth_order)

    def to_dict(self) -> dict:
        return {"keep": sorted(self.keep), "smooth_order": list(self.smooth_order),
                "claimed_cost": self.claimed_cost}

    @classmethod
    def from_dict(cls, data: dict) -> "ReconnectionPlan":
        plan = cls(frozenset(data["keep"]), tuple(data["smooth_order"]))
        if plan.claimed_cost != data["claimed_cost"]:
            raise ValueError("claimed_cost does not match smooth_order")
        return plan


# ---------------------------------------------------------------------------
# the rewiring primitive


def _rewire(d: LinkDiagram, links: dict[int, Iterable[tuple[int, int]]]) -> LinkDiagram:
    """Delete the crossings in ``links``; each (in, out) pair joins the edge
    ending at that crossing to the edge leaving it. Closed chains that no
    longer meet a crossing become free loops."""
    parent = {e: e for e in range(1, 2 * d.c + 1)}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for pairs in links.values():
        for e_in, e_out in pairs:
            parent[find(e_in)] = find(e_out)
    kept = [(k, x) for k, x in enumerate(d.crossings) if k not in links]
    used = {find(e) for _, x in kept for e in x.quad}
    loose = {find(e) for e in parent} - used
    raw = [(tuple(find(e) for e in x.quad), x.sign) for _, x in kept]
    return assemble(raw, d.free_loops + len(loose))


def _check_index(d: LinkDiagram, k: int) -> None:
    if not 0 <= k < d.c:
        raise IndexOutOfRange(f"crossing {k} not in 0..{d.c - 1}", site=k)


def smooth_crossing(d: LinkDiagram, k: int) -> LinkDiagram:
    """Oriented smoothing of crossing ``k``: one reconnection."""
    _check_index(d, k)
    return _rewire(d, {k: d.crossings[k].smoothing()})


def merge_circles(d: LinkDiagram, i: int, j: int) -> LinkDiagram:
    """Join free loops ``i`` and ``j`` into one: one reconnection."""
    for v in (i, j):
        if not 0 <= v < d.free_loops:
            raise NotFreeLoops(f"{v} is not a free loop (diagram has {d.free_loops})", site=v)
    if i == j:
        raise SameCircle("cannot merge a loop with itself", site=i)
    return LinkDiagram(d.crossings, d.free_loops - 1)


# ---------------------------------------------------------------------------
# Reidemeister simplification


def _find_r1(d: LinkDiagram) -> Optional[int]:
    for e, (k, s) in d.heads.items():
        k2, s2 = d.tails[e]
        if k == k2 and (s ^ 2) != s2:
            return k
    return None


def _find_r2(d: LinkDiagram) -> Optional[tuple[int, int]]:
    # an edge whose ends are both over-passes, and one whose ends are both
    # under-passes, between the same two crossings and bounding a face
    over_edges, under_edges = {}, {}
    for e in d.heads:
        (hk, hs), (tk, ts) = d.heads[e], d.tails[e]
        if hk == tk:
            continue
        if hs % 2 == 1 and ts % 2 == 1:
            over_edges.setdefault(frozenset((hk, tk)), []).append(e)
        elif hs % 2 == 0 and ts % 2 == 0:
            under_edges.setdefault(frozenset((hk, tk)), []).append(e)
    for pair in sorted(over_edges, key=sorted):
        if pair not in under_edges:
            continue
        x, y = sorted(pair)
        if d.crossings[x].sign == d.crossings[y].sign:
            continue
        for e1 in over_edges[pair]:
            for e2 in under_edges[pair]:
                s1 = {d.heads[e1][0]: d.heads[e1][1], d.tails[e1][0]: d.tails[e1][1]}
                s2 = {d.heads[e2][0]: d.heads[e2][1], d.tails[e2][0]: d.tails[e2][1]}
                dx = (s1[x] - s2[x]) % 4
                dy = (s2[y] - s1[y]) % 4
                if dx == dy and dx in (1, 3):
                    return x, y
    return None


def _pass_through(d: LinkDiagram, ks: Iterable[int]) -> LinkDiagram:
    return _rewire(d, {k: d.crossings[k].passes() for k in ks})


def reduce_r1_r2(d: LinkDiagram, r2: bool = True) -> LinkDiagram:
    """Greedily remove curls (R1) and clasp bigons (R2) until none remain."""
    while True:
        k = _find_r1(d)
        if k is not None:
            d = _pass_through(d, [k])
            continue
        if r2:
            pair = _find_r2(d)
            if pair is not None:
                d = _pass_through(d, pair)
                continue
        return d


def verify_unknot(d: LinkDiagram) -> Verdict:
    """CONFIRMED only if R1/R2 reduction reaches a single crossingless loop."""
    r = reduce_r1_r2(d)
    if r.c == 0 and r.free_loops == 1:
        return Verdict.CONFIRMED
    return Verdict.INCONCLUSIVE


# ---------------------------------------------------------------------------
# unknotting plans


def plan_unknotting(d: LinkDiagram) -> ReconnectionPlan:
    """Keep a spanning tree of the Seifert graph, smooth everything else."""
    if not is_connected(d):
        raise DisconnectedDiagram("plan needs a connected diagram")
    g = seifert_graph(d)
    parent = list(range(g.n_vertices))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    keep = set()
    for k, u, v, _ in sorted(g.edges):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            keep.add(k)
    smooth = tuple(k for k in range(d.c) if k not in keep)
    return ReconnectionPlan(frozenset(keep), smooth)


def _record(kind: str, site, sign: int, d: LinkDiagram) -> Step:
    return Step(kind, tuple(site), sign, d.n_components, writhe(d), d.c)


def apply_plan(d: LinkDiagram, plan: ReconnectionPlan) -> CascadeTrace:
    order = list(plan.smooth_order)
    if (len(set(order)) != len(order) or plan.keep & set(order)
            or plan.keep | set(order) != set(range(d.c))):
        raise InvalidPlan("keep and smooth_order must partition the crossings")
    # crossing ids are positional: track where each original crossing sits
    alive = list(range(d.c))
    steps = []
    cur = d
    for k in order:
        pos = alive.index(k)
        sign = cur.crossings[pos].sign
        cur = smooth_crossing(cur, pos)
        alive.pop(pos)
        steps.append(_record("smooth", (k,), sign, cur))
    return CascadeTrace(d, tuple(steps), cur)


# ---------------------------------------------------------------------------
# crossing switch in two reconnections


def _raw(d: LinkDiagram) -> list[list]:
    return [[list(x.quad), x.sign] for x in d.crossings]


def _insert_curl(raw: list[list], edge, sign: int, tag) -> object:
    """Put a kink of the given sign on ``edge``; returns the edge that now
    leaves the kink."""
    loop, out = ("loop", tag), ("out", tag)
    for q, s in raw:
        in_slots = (0, 3) if s > 0 else (0, 1)
        hit = [i for i in in_slots if q[i] == edge]
        if hit:
            q[hit[0]] = out
            break
    quad = [edge, out, loop, loop] if sign > 0 else [edge, loop, loop, out]
    raw.append([quad, sign])
    return out


def crossing_switch_gadget(d: LinkDiagram, k: int) -> tuple[LinkDiagram, int]:
    """Switch crossing ``k`` at the price of two reconnections.

    A pair of opposite kinks is born next to the crossing by R2/R3 moves; the
    two saddles then switch the crossing together with one kink. The result
    carries the switched crossing and two kinks of the crossing's original
    sign on its outgoing under-edge, so the writhe is unchanged.
    """
    _check_index(d, k)
    x = d.crossings[k]
    a, b, c, dd = x.quad
    raw = _raw(d)
    raw[k] = [[dd, a, b, c] if x.sign > 0 else [b, c, dd, a], -x.sign]
    tail = c
    for i in range(2):
        tail = _insert_curl(raw, tail, x.sign, (k, i))
    return assemble([(q, s) for q, s in raw], d.free_loops), 2


# ---------------------------------------------------------------------------
# cascades


def _budget_check(steps, max_steps, d, cur):
    if sum(1 for s in steps if s.kind != "reduce") >= max_steps:
        trace = CascadeTrace(d, tuple(steps), cur, complete=False)
        raise StepBudgetExceeded(f"cascade stopped after {max_steps} moves", trace=trace)


def cascade(d: LinkDiagram, policy: str = "planned", max_steps: int = 1000,
            seed: int = 0) -> CascadeTrace:
    """Run a reconnection cascade down to a single free loop.

    ``random`` smooths crossings in a uniformly random order and then merges
    random pairs of loops; randomness comes from numpy's PCG64 seeded with
    ``seed``. ``planned`` follows :func:`plan_unknotting` and then removes
    the leftover kinks. ``greedy-split`` simplifies by R1/R2 between moves
    and smooths the crossing that leaves the most components.
    """
    if policy not in POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    steps: list[Step] = []
    cur = d

    if policy == "planned":
        trace = apply_plan(d, plan_unknotting(d))
        steps = list(trace.steps)
        if len(steps) > max_steps:
            raise StepBudgetExceeded(f"plan needs {len(steps)} moves",
                                     trace=CascadeTrace(d, tuple(steps[:max_steps]),
                                                        trace.final, complete=False))
        cur = reduce_r1_r2(trace.final)
        if cur != trace.final:
            steps.append(_record("reduce", (), 0, cur))
        return CascadeTrace(d, tuple(steps), cur)

    if policy == "random":
        rng = np.random.Generator(np.random.PCG64(seed))
        while cur.c:
            _budget_check(steps, max_steps, d, cur)
            k = int(rng.integers(cur.c))
            sign = cur.crossings[k].sign
            cur = smooth_crossing(cur, k)
            steps.append(_record("smooth", (k,), sign, cur))

        def pick(n):
            i, j = rng.choice(n, size=2, replace=False)
            return int(i), int(j)
    else:
        while True:
            reduced = reduce_r1_r2(cur)
            if reduced != cur:
                cur = reduced
                steps.append(_record("reduce", (), 0, cur))
            if not cur.c:
                break
            _budget_check(steps, max_steps, d, cur)
            options = [(smooth_crossing(cur, k), k) for k in range(cur.c)]
            best, k = max(options, key=lambda o: (o[0].n_components, -o[1]))
            sign = cur.crossings[k].sign
            cur = best
            steps.append(_record("smooth", (k,), sign, cur))

        def pick(n):
            return 0, 1

    while cur.free_loops > 1:
        _budget_check(steps, max_steps, d, cur)
        cur = _merge_all_one(cur, steps, pick)
    return CascadeTrace(d, tuple(steps), cur)


def _merge_all_one(cur, steps, pick):
    i, j = pick(cur.free_loops)
    cur = merge_circles(cur, i, j)
    steps.append(_record("merge", (i, j), 0, cur))
    return cur


# ---------------------------------------------------------------------------
# exhaustive search


def search_reconnections(d: LinkDiagram, budget: int = 200_000) -> tuple[int, CascadeTrace]:
    """Breadth-first search over smoothings and free-loop merges.

    States are reduced by R1/R2 before expansion and deduplicated up to
    relabeling. Returns the fewest reconnections that reach one crossingless
    loop, with a witness trace. Moves are diagram-local, so the count is an
    upper bound on the reconnection number.
    """
    start = reduce_r1_r2(d)
    key0 = canonical_key(start)
    states = {key0: start}
    parent: dict[tuple, Optional[tuple]] = {key0: None}
    queue = deque([(key0, 0)])
    goal = None
    expanded = 0
    while queue:
        key, depth = queue.popleft()
        cur = states[key]
        if cur.c == 0 and cur.free_loops <= 1:
            goal = key
            break
        expanded += 1
        if expanded > budget:
            raise BudgetExceeded(f"explored more than {budget} states", site=depth)
        moves = [("smooth", (k,)) for k in range(cur.c)]
        if cur.free_loops >= 2:
            moves.append(("merge", (0, 1)))
        for kind, site in moves:
            nxt = smooth_crossing(cur, site[0]) if kind == "smooth" else merge_circles(cur, *site)
            nxt = reduce_r1_r2(nxt)
            nkey = canonical_key(nxt)
            if nkey not in parent:
                parent[nkey] = (key, kind, site)
                states[nkey] = nxt
                queue.append((nkey, depth + 1))
    if goal is None:
        raise BudgetExceeded("no sequence of moves reaches a single loop")

    path = []
    key = goal
    while parent[key] is not None:
        prev, kind, site = parent[key]
        path.append((prev, kind, site))
        key = prev
    path.reverse()

    steps = []
    if start != d:
        steps.append(_record("reduce", (), 0, start))
    cur = start
    for prev, kind, site in path:
        cur = states[prev]
        if kind == "smooth":
            sign = cur.crossings[site[0]].sign
            cur = smooth_crossing(cur, site[0])
        else:
            sign = 0
            cur = merge_circles(cur, *site)
        steps.append(_record(kind, site, sign, cur))
        reduced = reduce_r1_r2(cur)
        if reduced != cur:
            cur = reduced
            steps.append(_record("reduce", (), 0, cur))
    trace = CascadeTrace(d, tuple(steps), cur)
    return trace.total_reconnections, trace


def min_reconnections_search(d: LinkDiagram, budget: int = 200_000) -> int:
    return search_reconnections(d, budget)[0]
