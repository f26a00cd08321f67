"""Seifert's algorithm: circles, Seifert graph, genus, and the Seifert matrix
of a braid closure."""

from __future__ import annotations

from dataclasses import dataclass, field

from .braids import BraidWord
from .diagram import LinkDiagram, is_connected
from .errors import DisconnectedClosure, DisconnectedDiagram

__all__ = [
    "SeifertCircles",
    "SeifertGraph",
    "SeifertMatrix",
    "GenusReport",
    "seifert_circles",
    "seifert_graph",
    "seifert_genus",
    "seifert_matrix",
    "homology_loops",
]


@dataclass(frozen=True)
class SeifertCircles:
    count: int
    membership: dict[int, int] = field(default_factory=dict)  # edge -> circle index


@dataclass(frozen=True)
class SeifertGraph:
    n_vertices: int
    edges: tuple[tuple[int, int, int, int], ...]  # (crossing, circle, circle, sign)

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    def is_connected(self) -> bool:
        parent = list(range(self.n_vertices))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for _, u, v, _ in self.edges:
            parent[find(u)] = find(v)
        return len({find(i) for i in range(self.n_vertices)}) <= 1

    def to_dict(self) -> dict:
        return {"vertices": self.n_vertices,
                "edges": [{"crossing": k, "circles": [u, v], "sign": s}
                          for k, u, v, s in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "SeifertGraph":
        return cls(data["vertices"], tuple((e["crossing"], *e["circles"], e["sign"])
                                           for e in data["edges"]))


@dataclass(frozen=True)
class GenusReport:
    c: int
    s: int
    mu: int
    genus: int
    euler: int

    def to_dict(self) -> dict:
        return {"c": self.c, "s": self.s, "mu": self.mu, "genus": self.genus,
                "euler": self.euler}

    @classmethod
    def from_dict(cls, data: dict) -> "GenusReport":
        return cls(**{k: data[k] for k in ("c", "s", "mu", "genus", "euler")})


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("Seifert matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SeifertMatrix":
        return SeifertMatrix(tuple(zip(*self.entries)) if self.entries else ())

    def symmetrized(self) -> list[list[int]]:
        n = self.dim
        return [[self.entries[i][j] + self.entries[j][i] for j in range(n)] for i in range(n)]

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_dict(self) -> dict:
        return {"dim": self.dim, "entries": self.to_list()}

    @classmethod
    def from_dict(cls, data: dict) -> "SeifertMatrix":
        m = cls(tuple(tuple(r) for r in data["entries"]))
        if m.dim != data["dim"]:
            raise ValueError("dim does not match entries")
        return m


def seifert_circles(d: LinkDiagram) -> SeifertCircles:
    nxt = {}
    for x in d.crossings:
        for e_in, e_out in x.smoothing():
            nxt[e_in] = e_out
    membership: dict[int, int] = {}
    count = 0
    for e in range(1, 2 * d.c + 1):
        if e in membership:
            continue
        f = e
        while f not in membership:
            membership[f] = count
            f = nxt[f]
        count += 1
    return SeifertCircles(count + d.free_loops, membership)


def seifert_graph(d: LinkDiagram) -> SeifertGraph:
    circles = seifert_circles(d)
    m = circles.membership
    edges = tuple((k, m[x.quad[0]], m[x.over_in], x.sign) for k, x in enumerate(d.crossings))
    return SeifertGraph(circles.count, edges)


def seifert_genus(d: LinkDiagram) -> GenusReport:
    """Genus of the surface built by Seifert's algorithm, computed two ways."""
    if not is_connected(d):
        raise DisconnectedDiagram("Seifert genus formula needs a connected diagram")
    c, mu = d.c, d.n_components
    graph = seifert_graph(d)
    s = graph.n_vertices
    twice = c - s + 1 - (mu - 1)
    # Euler route: cells of the projected graph with 2-cells on circles and
    # components; capping the mu boundary circles gives a closed surface
    closed_chi = c - len(d.heads) + s + mu
    g_euler, odd = divmod(2 - closed_chi, 2)
    euler = closed_chi - mu
    # first Betti number of the surface = cycle rank of the Seifert graph
    betti = len(graph.edges) - graph.n_vertices + 1
    if twice % 2 or odd or twice // 2 != g_euler or betti != 2 * g_euler + mu - 1:
        raise AssertionError(f"genus routes disagree: c={c} s={s} mu={mu}")
    return GenusReport(c, s, mu, g_euler, euler)


def homology_loops(b: BraidWord) -> list[tuple[int, int, int, int, int]]:
    """Basis loops of the disk-and-band surface: one per consecutive band
    pair in each column, as (column, first pos, second pos, sign, sign)."""
    loops = []
    for col in range(1, b.strands):
        bands = [(pos, 1 if v > 0 else -1) for pos, v in enumerate(b.letters) if abs(v) == col]
        for (p1, e1), (p2, e2) in zip(bands, bands[1:]):
            loops.append((col, p1, p2, e1, e2))
    return loops


def _pairing(x, y) -> int:
    """Seifert form on two basis loops of a braid surface."""
    cx, p1, p2, e1, e2 = x
    cy, q1, q2, f1, f2 = y
    if x == y:
        if e1 == e2:
            return -e1
        return 0
    if cx == cy:
        if p2 == q1:  # y follows x and they share the band at p2
            return 1 if e2 > 0 else 0
        if q2 == p1:  # x follows y
            return 0 if e1 > 0 else -1
        return 0
    if cy == cx + 1:
        # loops in neighbouring columns meet only on the shared disk
        if p1 < q1 < p2 < q2:
            return 1
        if q1 < p1 < q2 < p2:
            return -1
    return 0


def seifert_matrix(b: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the closure of ``b`` from its disk-and-band surface.

    Disks sit on the strand circles, one half-twisted band per letter. The
    positive trefoil ``2 | 1 1 1`` gives [[-1, 1], [0, -1]].
    """
    if not b.is_full:
        missing = sorted(set(range(1, b.strands)) - b.columns_used)
        raise DisconnectedClosure("closure is split: some generator never occurs",
                                  site=missing)
    loops = homology_loops(b)
    return SeifertMatrix(tuple(tuple(_pairing(x, y) for y in loops) for x in loops))
