"""Oriented link diagrams stored as PD codes.

A crossing is a quadruple ``(a, b, c, d)`` of edge labels listed
counterclockwise, starting from the incoming under-strand ``a``; ``c`` is
the outgoing under-strand. The over-strand runs ``d -> b`` at a positive
crossing and ``b -> d`` at a negative one (the KnotTheory convention).

Crossingless circles are carried as a ``free_loops`` count.
"""

from __future__ import annotations

import json
import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .errors import IndexOutOfRange, InvalidEdgeSet, MalformedCode, OrientationConflict

__all__ = [
    "Crossing",
    "LinkDiagram",
    "DiagramStats",
    "parse_pd",
    "serialize_pd",
    "crossing_sign",
    "writhe",
    "component_count",
    "is_positive",
    "is_connected",
    "mirror",
    "reverse_components",
    "diagram_stats",
    "assemble",
    "canonical_key",
    "same_diagram",
]


@dataclass(frozen=True)
class Crossing:
    quad: tuple[int, int, int, int]
    sign: int

    @property
    def in_slots(self) -> tuple[int, int]:
        return (0, 3) if self.sign > 0 else (0, 1)

    @property
    def out_slots(self) -> tuple[int, int]:
        return (2, 1) if self.sign > 0 else (2, 3)

    @property
    def over_in(self) -> int:
        return self.quad[3] if self.sign > 0 else self.quad[1]

    @property
    def over_out(self) -> int:
        return self.quad[1] if self.sign > 0 else self.quad[3]

    def passes(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """(in, out) edge pairs of the under- and over-strand."""
        return (self.quad[0], self.quad[2]), (self.over_in, self.over_out)

    def smoothing(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """(in, out) edge pairs after the orientation-respecting smoothing."""
        return (self.quad[0], self.over_out), (self.over_in, self.quad[2])


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.free_loops < 0:
            raise InvalidEdgeSet("free_loops must be nonnegative")
        n = len(self.crossings)
        counts = Counter(e for x in self.crossings for e in x.quad)
        if set(counts) != set(range(1, 2 * n + 1)) or any(v != 2 for v in counts.values()):
            raise InvalidEdgeSet(f"edge ids must be 1..{2 * n}, each used exactly twice")
        heads = Counter(x.quad[s] for x in self.crossings for s in x.in_slots)
        if any(v != 1 for v in heads.values()) or len(heads) != 2 * n:
            raise OrientationConflict("every edge must enter exactly one crossing")

    def __len__(self) -> int:
        return len(self.crossings)

    @property
    def c(self) -> int:
        return len(self.crossings)

    @cached_property
    def heads(self) -> dict[int, tuple[int, int]]:
        """edge -> (crossing, slot) where the edge ends."""
        return {x.quad[s]: (k, s) for k, x in enumerate(self.crossings) for s in x.in_slots}

    @cached_property
    def tails(self) -> dict[int, tuple[int, int]]:
        """edge -> (crossing, slot) where the edge starts."""
        return {x.quad[s]: (k, s) for k, x in enumerate(self.crossings) for s in x.out_slots}

    def successor(self, edge: int) -> int:
        """Next edge along the strand."""
        k, s = self.heads[edge]
        x = self.crossings[k]
        return x.quad[2] if s == 0 else x.over_out

    @cached_property
    def component_cycles(self) -> tuple[tuple[int, ...], ...]:
        """Edge cycles of the components that carry crossings."""
        seen: set[int] = set()
        cycles = []
        for e in range(1, 2 * self.c + 1):
            if e in seen:
                continue
            cyc = [e]
            seen.add(e)
            f = self.successor(e)
            while f != e:
                cyc.append(f)
                seen.add(f)
                f = self.successor(f)
            cycles.append(tuple(cyc))
        return tuple(cycles)

    @property
    def n_components(self) -> int:
        return len(self.component_cycles) + self.free_loops

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(x.sign for x in self.crossings)

    def __str__(self) -> str:
        return serialize_pd(self)


@dataclass(frozen=True)
class DiagramStats:
    c: int
    mu: int
    writhe: int
    positive: bool
    connected: bool

    def to_dict(self) -> dict:
        return {"c": self.c, "mu": self.mu, "writhe": self.writhe,
                "positive": self.positive, "connected": self.connected}

    @classmethod
    def from_dict(cls, data: dict) -> "DiagramStats":
        return cls(**{k: data[k] for k in ("c", "mu", "writhe", "positive", "connected")})


# ---------------------------------------------------------------------------
# parsing

_LOOPS_RE = re.compile(r"\+\s*L\s*(\d+)\s*$")


def parse_pd(text: str, free_loops: int = 0) -> LinkDiagram:
    """Parse ``[[a,b,c,d],...]`` with an optional ``+ L<k>`` suffix.

    Orientation is recovered from the under-strands (``a -> c``); a
    component that only ever passes over is oriented by its edge numbering,
    increasing with wrap-around at the component's largest label.
    """
    text = text.strip()
    m = _LOOPS_RE.search(text)
    if m:
        free_loops += int(m.group(1))
        text = text[: m.start()].strip()
    if text.startswith("PD[") and text.endswith("]"):
        text = "[" + text[3:-1].replace("X[", "[") + "]"
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedCode(f"not a bracketed PD list: {exc.msg}", site=exc.pos) from None
    if not isinstance(raw, list):
        raise MalformedCode("PD code must be a list of quadruples")
    quads = []
    for i, q in enumerate(raw):
        if (not isinstance(q, list) or len(q) != 4
                or not all(isinstance(v, int) and not isinstance(v, bool) and v > 0 for v in q)):
            raise MalformedCode(f"entry {i} is not a quadruple of positive integers", site=i)
        quads.append(tuple(q))

    n = len(quads)
    counts = Counter(e for q in quads for e in q)
    bad = sorted(e for e, v in counts.items() if v != 2 or e > 2 * n)
    if bad or len(counts) != 2 * n:
        missing = sorted(set(range(1, 2 * n + 1)) - set(counts))
        raise InvalidEdgeSet(
            f"edge ids must be exactly 1..{2 * n} with each used twice",
            site={"bad": bad, "missing": missing},
        )
    signs = _infer_signs(quads)
    return LinkDiagram(tuple(Crossing(q, s) for q, s in zip(quads, signs)), free_loops)


def _infer_signs(quads: Sequence[tuple[int, int, int, int]]) -> list[int]:
    occ: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for k, q in enumerate(quads):
        for s, e in enumerate(q):
            occ[e].append((k, s))

    over_dir: dict[int, int] = {}  # crossing -> slot where the over-strand enters
    visited: set[tuple[int, int]] = set()
    for k in range(len(quads)):
        for s0 in range(4):
            if (k, s0) in visited:
                continue
            # walk one component: traversals (crossing, entry slot, exit slot)
            walk = []
            kk, ss = k, s0
            while (kk, ss) not in visited:
                visited.add((kk, ss))
                out = ss ^ 2
                visited.add((kk, out))
                walk.append((kk, ss, out))
                e = quads[kk][out]
                a, b = occ[e]
                kk, ss = b if a == (kk, out) else a
            votes = {+1 if i == 0 else -1 for kk, i, _ in walk if i in (0, 2)}
            if len(votes) == 2:
                raise OrientationConflict("under-strands disagree on a component's direction",
                                          site=k)
            if votes:
                forward = votes.pop() > 0
            else:
                forward = _numbering_direction(quads, walk)
            for kk, i, o in walk:
                if i in (1, 3):
                    over_dir[kk] = i if forward else o
    return [+1 if over_dir[k] == 3 else -1 for k in range(len(quads))]


def _numbering_direction(quads, walk) -> bool:
    edges = sorted({quads[k][i] for k, i, _ in walk} | {quads[k][o] for k, _, o in walk})

    def succ(e):
        j = edges.index(e)
        return edges[(j + 1) % len(edges)]

    votes = set()
    for k, i, o in walk:
        ein, eout = quads[k][i], quads[k][o]
        fwd, bwd = eout == succ(ein), ein == succ(eout)
        if fwd != bwd:
            votes.add(fwd)
    if len(votes) == 2:
        raise OrientationConflict("edge numbering is not sequential along a component",
                                  site=walk[0][0])
    if votes:
        return votes.pop()
    # every step ambiguous (two-edge over-only loop): read the first pass as b -> d
    k, i, _ = walk[0]
    return i == 1


def serialize_pd(d: LinkDiagram) -> str:
    body = "[" + ",".join("[" + ",".join(map(str, x.quad)) + "]" for x in d.crossings) + "]"
    return body + (f" + L{d.free_loops}" if d.free_loops else "")


# ---------------------------------------------------------------------------
# elementary quantities


def crossing_sign(d: LinkDiagram, k: int) -> int:
    if not 0 <= k < d.c:
        raise IndexOutOfRange(f"crossing {k} not in 0..{d.c - 1}", site=k)
    return d.crossings[k].sign


def writhe(d: LinkDiagram) -> int:
    return sum(x.sign for x in d.crossings)


def component_count(d: LinkDiagram) -> int:
    return d.n_components


def is_positive(d: LinkDiagram) -> bool:
    return all(x.sign > 0 for x in d.crossings)


def _crossing_pieces(d: LinkDiagram) -> list[list[int]]:
    """Connected pieces of the projected 4-valent graph, as crossing lists."""
    parent = list(range(d.c))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e, (k, _) in d.heads.items():
        a, b = find(k), find(d.tails[e][0])
        if a != b:
            parent[a] = b
    groups: dict[int, list[int]] = defaultdict(list)
    for k in range(d.c):
        groups[find(k)].append(k)
    return list(groups.values())


def is_connected(d: LinkDiagram) -> bool:
    if d.c == 0:
        return d.free_loops == 1
    return d.free_loops == 0 and len(_crossing_pieces(d)) == 1


def diagram_stats(d: LinkDiagram) -> DiagramStats:
    return DiagramStats(d.c, d.n_components, writhe(d), is_positive(d), is_connected(d))


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing; quadruples are re-rooted at the new under-strand."""
    out = []
    for x in d.crossings:
        a, b, c, dd = x.quad
        quad = (dd, a, b, c) if x.sign > 0 else (b, c, dd, a)
        out.append(Crossing(quad, -x.sign))
    return LinkDiagram(tuple(out), d.free_loops)


def reverse_components(d: LinkDiagram, which: Iterable[int]) -> LinkDiagram:
    """Reverse the orientation of the listed components (indices into
    ``d.component_cycles``). Crossings between a reversed and a kept
    component change sign."""
    flip = set()
    for i in which:
        flip.update(d.component_cycles[i])
    raw = []
    for x in d.crossings:
        a, b, c, dd = x.quad
        under_rev = a in flip
        over_rev = x.over_in in flip
        if under_rev:
            # new incoming under-strand is c; rotate so it leads
            quad = (c, dd, a, b)
        else:
            quad = (a, b, c, dd)
        sign = x.sign * (-1 if under_rev != over_rev else 1)
        raw.append((quad, sign))
    return assemble(raw, d.free_loops)


# ---------------------------------------------------------------------------
# construction from arbitrary labels


def assemble(raw: Sequence[tuple[Sequence[Hashable], int]], free_loops: int = 0) -> LinkDiagram:
    """Build a diagram from crossings over arbitrary hashable edge labels.

    Edges are renumbered 1..2c consecutively along each component (in order
    of first appearance), so the serialized code re-parses to the same
    orientation. Crossing order is preserved.
    """
    raw = [(tuple(q), int(s)) for q, s in raw]
    head: dict[Hashable, tuple[int, int]] = {}
    for k, (q, s) in enumerate(raw):
        for slot in ((0, 3) if s > 0 else (0, 1)):
            head[q[slot]] = (k, slot)

    def succ(e):
        k, slot = head[e]
        q, s = raw[k]
        if slot == 0:
            return q[2]
        return q[1] if s > 0 else q[3]

    label: dict[Hashable, int] = {}
    nxt = 1
    for q, _ in raw:
        for e in q:
            if e in label:
                continue
            f = e
            while f not in label:
                label[f] = nxt
                nxt += 1
                f = succ(f)
    crossings = tuple(Crossing(tuple(label[e] for e in q), s) for q, s in raw)
    return LinkDiagram(crossings, free_loops)


# ---------------------------------------------------------------------------
# structural comparison


def _piece_code(d: LinkDiagram, start: int) -> tuple:
    label: dict[int, int] = {}
    order = [start]
    seen = {start}
    code = []
    i = 0
    while i < len(order):
        k = order[i]
        i += 1
        x = d.crossings[k]
        row = []
        for e in x.quad:
            if e not in label:
                label[e] = len(label)
            row.append(label[e])
        code.append((x.sign, *row))
        for e in (x.quad[2], x.over_out):
            h = d.heads[e][0]
            if h not in seen:
                seen.add(h)
                order.append(h)
    return tuple(code)


def canonical_key(d: LinkDiagram) -> tuple:
    """Relabeling-invariant key: equal keys iff the diagrams are the same
    oriented combinatorial map (crossing order and edge labels ignored)."""
    pieces = []
    for piece in _crossing_pieces(d):
        pieces.append(min(_piece_code(d, k) for k in piece))
    return (d.free_loops, tuple(sorted(pieces)))


def same_diagram(d1: LinkDiagram, d2: LinkDiagram) -> bool:
    if d1.c != d2.c or d1.free_loops != d2.free_loops:
        return False
    return canonical_key(d1) == canonical_key(d2)
