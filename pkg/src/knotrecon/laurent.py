"""Integer Laurent polynomials in one variable ``t`` and exact determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

__all__ = ["LaurentPoly", "normalize_laurent", "laurent_det"]

Scalar = Union[int, "LaurentPoly"]


@dataclass(frozen=True)
class LaurentPoly:
    """sum(coeffs[i] * t**(min_exp + i)), stored trimmed; zero is ``()``."""

    min_exp: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        cs = [int(v) for v in self.coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        cs = cs[lo:hi]
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "min_exp", self.min_exp + lo if cs else 0)

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls(0, (value,))

    @classmethod
    def t(cls, power: int = 1) -> "LaurentPoly":
        return cls(power, (1,))

    @classmethod
    def from_dict(cls, data: dict) -> "LaurentPoly":
        return cls(int(data["min_exp"]), tuple(data["coeffs"]))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(e, 0) for e in range(lo, hi + 1)))

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def terms(self) -> dict[int, int]:
        return {self.min_exp + i: c for i, c in enumerate(self.coeffs) if c}

    def __call__(self, value):
        """Evaluate; integer input with negative exponents yields a Fraction."""
        total = 0
        for e, c in self.terms().items():
            total += c * (Fraction(value) ** e if e < 0 else value ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def to_dict(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": list(self.coeffs)}

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _lift(other: Scalar) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other: Scalar) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = self.terms()
        for e, c in other.terms().items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly.from_terms(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_exp, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.min_exp + other.min_exp, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.coeffs) == 1 and abs(self.coeffs[0]) == 1:
                return LaurentPoly(self.min_exp * n, (self.coeffs[0] ** n,))
            raise ValueError("only units have negative powers")
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        return LaurentPoly(self.min_exp + k, self.coeffs) if self.coeffs else self

    def reverse(self) -> "LaurentPoly":
        """p(1/t)."""
        return LaurentPoly(-self.max_exp, self.coeffs[::-1]) if self.coeffs else self

    def exact_div(self, other: Scalar) -> "LaurentPoly":
        """Quotient in Z[t, 1/t]; raises ValueError when ``other`` does not divide."""
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        # long division on dense coefficient lists, highest degree first
        rem = list(self.coeffs[::-1])
        div = other.coeffs[::-1]
        if len(rem) < len(div):
            raise ValueError("not divisible")
        quot = []
        for i in range(len(rem) - len(div) + 1):
            q, r = divmod(rem[i], div[0])
            if r:
                raise ValueError("not divisible over the integers")
            quot.append(q)
            if q:
                for j, dc in enumerate(div):
                    rem[i + j] -= q * dc
        if any(rem):
            raise ValueError("not divisible")
        return LaurentPoly(self.min_exp - other.min_exp, tuple(quot[::-1]))

    # -- display ----------------------------------------------------------
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.terms(), reverse=True):
            c = self.terms()[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def normalize_laurent(p: LaurentPoly) -> LaurentPoly:
    """Representative of ``p`` up to units +-t^k: lowest exponent 0, leading coefficient > 0."""
    if p.is_zero():
        return p
    sign = 1 if p.coeffs[-1] > 0 else -1
    return LaurentPoly(0, tuple(sign * c for c in p.coeffs))


def laurent_det(matrix: Sequence[Sequence[Scalar]]) -> LaurentPoly:
    """Determinant by fraction-free (Bareiss) elimination; exact in Z[t, 1/t]."""
    m = [[LaurentPoly._lift(v) for v in row] for row in matrix]
    n = len(m)
    if n == 0:
        return LaurentPoly.const(1)
    sign = 1
    prev = LaurentPoly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]).exact_div(prev)
        prev = pivot
    return m[n - 1][n - 1] * sign
