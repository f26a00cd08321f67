"""Braid words, their closures, and generators for the standard example families."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .diagram import LinkDiagram, assemble
from .errors import DegenerateParameters, GeneratorOutOfRange, MalformedWord

__all__ = [
    "BraidWord",
    "parse_braid_word",
    "format_braid_word",
    "braid_closure",
    "braid_permutation",
    "torus_braid",
    "table_braid",
    "TABLE_BRAIDS",
]


@dataclass(frozen=True)
class BraidWord:
    """Letter ``+i`` is sigma_i, ``-i`` its inverse, on ``strands`` strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(v) for v in self.letters))
        if self.strands < 1:
            raise MalformedWord("a braid needs at least one strand")
        for pos, v in enumerate(self.letters):
            if v == 0 or abs(v) >= self.strands:
                raise GeneratorOutOfRange(
                    f"letter {v} needs at least {abs(v) + 1} strands", site=pos)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_braid_word(self)

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-v for v in self.letters))

    @property
    def columns_used(self) -> set[int]:
        return {abs(v) for v in self.letters}

    @property
    def is_full(self) -> bool:
        """Every generator column occurs, so the closure diagram is connected."""
        return self.columns_used == set(range(1, self.strands))


_HEADER_RE = re.compile(r"^\s*(\d+)\s*\|(.*)$", re.S)


def parse_braid_word(text: str) -> BraidWord:
    """Parse ``"<n> | <letter> <letter> ..."``."""
    m = _HEADER_RE.match(text)
    if not m:
        raise MalformedWord("expected '<strands> | <letters>'")
    letters = []
    for tok in m.group(2).replace(",", " ").split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise MalformedWord(f"not a signed integer: {tok!r}", site=tok) from None
    return BraidWord(int(m.group(1)), tuple(letters))


def format_braid_word(b: BraidWord) -> str:
    return f"{b.strands} | " + " ".join(map(str, b.letters)) if b.letters else f"{b.strands} | "


def braid_permutation(b: BraidWord) -> list[int]:
    """perm[p] = bottom position of the strand that ends at top position p."""
    perm = list(range(b.strands))
    for v in b.letters:
        i = abs(v) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return perm


def braid_closure(b: BraidWord) -> LinkDiagram:
    """Standard closure; crossing k corresponds to letter k.

    Strands run upward. For sigma_i the strand entering from the left passes
    over; the positive crossing has quad (BR, AR, AL, BL) and the negative
    one (BL, BR, AR, AL), writing B/A for below/above and L/R for the two
    positions.
    """
    n = b.strands
    bottom = [("bot", p) for p in range(n)]
    cur = list(bottom)
    raw = []
    for k, v in enumerate(b.letters):
        i = abs(v) - 1
        bl, br = cur[i], cur[i + 1]
        al, ar = ("e", k, 0), ("e", k, 1)
        quad = (br, ar, al, bl) if v > 0 else (bl, br, ar, al)
        raw.append([list(quad), 1 if v > 0 else -1])
        cur[i], cur[i + 1] = al, ar
    # identify the top edge at each position with the bottom edge there
    alias = {cur[p]: bottom[p] for p in range(n) if cur[p] != bottom[p]}
    for q, _ in raw:
        for s in range(4):
            q[s] = alias.get(q[s], q[s])
    touched = {abs(v) - 1 for v in b.letters} | {abs(v) for v in b.letters}
    free = sum(1 for p in range(n) if p not in touched)
    return assemble([(q, s) for q, s in raw], free)


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^q on p strands; closure is the (p, q) torus link."""
    if p < 2 or q < 2:
        raise DegenerateParameters(f"torus parameters must be >= 2, got ({p}, {q})")
    return BraidWord(p, tuple(range(1, p)) * q)


# Braid representatives from the standard knot tables (KnotInfo chirality).
TABLE_BRAIDS: dict[str, BraidWord] = {
    "0_1": BraidWord(1, ()),
    "3_1": BraidWord(2, (1, 1, 1)),
    "4_1": BraidWord(3, (1, -2, 1, -2)),
    "5_1": BraidWord(2, (1, 1, 1, 1, 1)),
    "5_2": BraidWord(3, (1, 1, 1, 2, -1, 2)),
    "6_1": BraidWord(4, (1, 1, 2, -1, -3, 2, -3)),
    "6_2": BraidWord(3, (1, 1, 1, -2, 1, -2)),
    "6_3": BraidWord(3, (1, 1, -2, 1, -2, -2)),
    "7_1": BraidWord(2, (1,) * 7),
}


def table_braid(name: str) -> BraidWord:
    try:
        return TABLE_BRAIDS[name]
    except KeyError:
        raise DegenerateParameters(
            f"unknown table knot {name!r}; known: {', '.join(TABLE_BRAIDS)}") from None


def torus_seifert_genus(p: int, q: int) -> int:
    """Seifert genus of the torus knot T(p, q), gcd(p, q) = 1."""
    if math.gcd(p, q) != 1:
        raise DegenerateParameters("torus knot needs coprime parameters")
    return (p - 1) * (q - 1) // 2
