"""Alexander polynomial, signature, and reconnection-number bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .braids import BraidWord, braid_closure
from .diagram import LinkDiagram, is_connected, is_positive, same_diagram
from .errors import (
    DisconnectedClosure,
    DisconnectedDiagram,
    InconsistentBounds,
    MismatchedBraid,
    NotPositive,
)
from .laurent import LaurentPoly, laurent_det, normalize_laurent
from .seifert import SeifertMatrix, seifert_circles, seifert_matrix

__all__ = [
    "Certificate",
    "ReconnectionBounds",
    "alexander_polynomial",
    "normalize_laurent",
    "signature",
    "symmetric_signature",
    "burau_alexander_oracle",
    "reconnection_bounds",
    "reconnection_number_positive",
    "braid_invariants",
]


def alexander_polynomial(m: SeifertMatrix) -> LaurentPoly:
    """det(V - t V^T) in exact integer arithmetic."""
    t = LaurentPoly.t()
    n = m.dim
    v = m.entries
    return laurent_det([[v[i][j] - t * v[j][i] for j in range(n)] for i in range(n)])


def symmetric_signature(a: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix by exact congruence elimination.

    Nonzero diagonal pivots contribute their sign; when the remaining
    diagonal vanishes, a 2x2 block [[0, x], [x, 0]] is split off, which
    contributes one positive and one negative direction.
    """
    m = [[Fraction(v) for v in row] for row in a]
    for i in range(len(m)):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    while m:
        n = len(m)
        piv = next((i for i in range(n) if m[i][i] != 0), None)
        if piv is not None:
            p = m[piv][piv]
            if p > 0:
                pos += 1
            else:
                neg += 1
            rest = [r for r in range(n) if r != piv]
            m = [[m[r][s] - m[r][piv] * m[piv][s] / p for s in rest] for r in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0), None)
        if pair is None:
            break  # zero block: null directions
        i, j = pair
        x = m[i][j]
        pos += 1
        neg += 1
        rest = [r for r in range(n) if r not in pair]
        m = [[m[r][s] - (m[r][i] * m[j][s] + m[r][j] * m[i][s]) / x for s in rest]
             for r in rest]
    return pos - neg


def signature(m: SeifertMatrix) -> int:
    return symmetric_signature(m.symmetrized())


# ---------------------------------------------------------------------------
# independent route: reduced Burau representation (sympy)


@lru_cache(maxsize=None)
def _burau_generator(n: int, letter: int):
    import sympy

    t = sympy.Symbol("t")
    size = n - 1
    m = sympy.eye(size)
    i = abs(letter) - 1  # 0-based generator index
    m[i, i] = -t
    if i > 0:
        m[i - 1, i] = t
    if i < size - 1:
        m[i + 1, i] = 1
    return m if letter > 0 else m.inv()


def burau_alexander_oracle(b: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure from det(rho(b) - I) divided by
    1 + t + ... + t^(n-1). Used as an independent check on the Seifert route."""
    import sympy

    if not b.is_full:
        raise DisconnectedClosure("closure is split: some generator never occurs")
    n = b.strands
    t = sympy.Symbol("t")
    if n == 1:
        return LaurentPoly.const(1)
    rho = sympy.eye(n - 1)
    for v in b.letters:
        rho = rho * _burau_generator(n, v)
    det = sympy.cancel(sympy.together((rho - sympy.eye(n - 1)).det(method="berkowitz")))
    num, den = sympy.fraction(det)
    quotient = sympy.cancel(num / (den * sum(t**k for k in range(n))))
    qn, qd = sympy.fraction(sympy.together(quotient))
    qd_poly = sympy.Poly(qd, t)
    if len(qd_poly.terms()) != 1:
        raise ArithmeticError(f"Burau quotient is not a Laurent polynomial: {quotient}")
    (shift,), dcoef = qd_poly.terms()[0]
    num_poly = sympy.Poly(sympy.expand(qn), t)
    terms = {}
    for (e,), c in num_poly.terms():
        c = sympy.Rational(c, dcoef)
        if c.q != 1:
            raise ArithmeticError("non-integral Burau quotient")
        terms[e - shift] = int(c)
    return normalize_laurent(LaurentPoly.from_terms(terms))


# ---------------------------------------------------------------------------
# reconnection number


@dataclass(frozen=True)
class Certificate:
    kind: str    # signature | components | seifert-rank | unknotting | positivity
    role: str    # lower | upper | exact
    value: int
    note: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "role": self.role, "value": self.value, "note": self.note}

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        return cls(data["kind"], data["role"], data["value"], data.get("note", ""))


@dataclass(frozen=True)
class ReconnectionBounds:
    lower: int
    upper: int
    exact: Optional[int] = None
    certificates: tuple[Certificate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.lower > self.upper:
            raise InconsistentBounds(f"lower bound {self.lower} exceeds upper {self.upper}")
        if (self.exact is not None) != (self.lower == self.upper):
            raise InconsistentBounds("exact must be set iff the bounds meet")
        if self.exact is not None and self.exact != self.lower:
            raise InconsistentBounds("exact disagrees with the bounds")

    def to_dict(self) -> dict:
        out = {"lower": self.lower, "upper": self.upper}
        if self.exact is not None:
            out["exact"] = self.exact
        out["certificates"] = [c.to_dict() for c in self.certificates]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ReconnectionBounds":
        return cls(data["lower"], data["upper"], data.get("exact"),
                   tuple(Certificate.from_dict(c) for c in data["certificates"]))


def reconnection_number_positive(d: LinkDiagram) -> int:
    """c - s + 1 for a connected positive diagram."""
    if not is_connected(d):
        raise DisconnectedDiagram("reconnection formula needs a connected diagram")
    if not is_positive(d):
        raise NotPositive("diagram has negative crossings",
                          site=[k for k, x in enumerate(d.crossings) if x.sign < 0])
    return d.c - seifert_circles(d).count + 1


def reconnection_bounds(d: LinkDiagram, b: Optional[BraidWord] = None,
                        u: Optional[int] = None) -> ReconnectionBounds:
    """Interval for the reconnection number from every available certificate.

    Lower: |signature| (braid given), mu - 1, 0. Upper: c - s + 1, and
    2u + mu - 1 when an unknotting number is supplied. A positive connected
    diagram pins the value at c - s + 1.
    """
    if not is_connected(d):
        raise DisconnectedDiagram("bounds need a connected diagram")
    if b is not None and not same_diagram(braid_closure(b), d):
        raise MismatchedBraid("braid closure differs from the diagram")
    mu = d.n_components
    rank = d.c - seifert_circles(d).count + 1

    lows = [Certificate("components", "lower", mu - 1)]
    if b is not None:
        sig = signature(seifert_matrix(b))
        lows.append(Certificate("signature", "lower", abs(sig), f"sigma={sig}"))
    ups = [Certificate("seifert-rank", "upper", rank, "c - s + 1")]
    if u is not None:
        if u < 0:
            raise ValueError("unknotting number must be nonnegative")
        ups.append(Certificate("unknotting", "upper", 2 * u + mu - 1, f"u={u}"))

    lower = max([0] + [c.value for c in lows])
    upper = min(c.value for c in ups)
    certs = [c for c in lows if c.value == lower] + [c for c in ups if c.value == upper]
    if is_positive(d):
        if rank < lower or rank > upper:
            raise InconsistentBounds(f"positive diagram value {rank} outside [{lower}, {upper}]")
        lower = upper = rank
        certs.append(Certificate("positivity", "exact", rank,
                                 "positive diagram: 2*g4 + mu - 1 = c - s + 1"))
    exact = lower if lower == upper else None
    return ReconnectionBounds(lower, upper, exact, tuple(certs))


def braid_invariants(b: BraidWord) -> tuple[LaurentPoly, int]:
    """Normalized Alexander polynomial and signature via the Seifert matrix."""
    m = seifert_matrix(b)
    return normalize_laurent(alexander_polynomial(m)), signature(m)
