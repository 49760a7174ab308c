"""Exact arithmetic in Q(sqrt2, sqrt3).

This field contains cos(pi/m) for every Coxeter exponent m in {2, 3, 4, 6},
so reflection-representation matrices over it are exact.  Elements are kept
as rational coordinates over the basis (1, sqrt2, sqrt3, sqrt6).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class QuadraticFieldElement:
    """a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) with rational coordinates."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    @classmethod
    def from_rational(cls, x) -> "QuadraticFieldElement":
        return cls(Fraction(x))

    @classmethod
    def zero(cls) -> "QuadraticFieldElement":
        return _ZERO

    @classmethod
    def one(cls) -> "QuadraticFieldElement":
        return _ONE

    @classmethod
    def cos_pi_over(cls, m: int) -> "QuadraticFieldElement":
        """cos(pi/m) for m in {2, 3, 4, 6}."""
        if m == 2:
            return _ZERO
        if m == 3:
            return cls(_HALF)
        if m == 4:
            return cls(Fraction(0), _HALF)
        if m == 6:
            return cls(Fraction(0), Fraction(0), _HALF)
        raise ValueError(f"cos(pi/{m}) lies outside Q(sqrt2, sqrt3)")

    def __add__(self, other: "QuadraticFieldElement") -> "QuadraticFieldElement":
        return QuadraticFieldElement(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other: "QuadraticFieldElement") -> "QuadraticFieldElement":
        return QuadraticFieldElement(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __neg__(self) -> "QuadraticFieldElement":
        return QuadraticFieldElement(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other: "QuadraticFieldElement") -> "QuadraticFieldElement":
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        # basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, ...
        return QuadraticFieldElement(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    def scale(self, x) -> "QuadraticFieldElement":
        r = Fraction(x)
        return QuadraticFieldElement(self.a * r, self.b * r, self.c * r, self.d * r)

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def __repr__(self) -> str:
        terms = []
        for coeff, sym in ((self.a, ""), (self.b, "*sqrt2"), (self.c, "*sqrt3"), (self.d, "*sqrt6")):
            if coeff:
                terms.append(f"{coeff}{sym}")
        return "QFE(" + (" + ".join(terms) if terms else "0") + ")"


_ZERO = QuadraticFieldElement()
_ONE = QuadraticFieldElement(Fraction(1))
