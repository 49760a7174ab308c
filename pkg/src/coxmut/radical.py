"""Exact scalars of the form q*sqrt(r) with q rational and r squarefree.

These are the quantities that appear in the diagram mutation rule and in the
cycle exponents t(l): square roots of arrow weights, their products, and
signed differences.  Two nonzero values can only be added or subtracted when
their radicands agree; on valid diagrams the perfect-square cycle condition
guarantees this, so a mismatch is diagnostic of an invalid input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class RadicandMismatchError(ArithmeticError):
    """Sum of radicals with distinct radicands is not representable here."""


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Split n >= 0 as q**2 * r with r squarefree; returns (q, r)."""
    if n < 0:
        raise ValueError("radicand must be non-negative")
    if n in (0, 1):
        return (n, 1) if n else (0, 1)
    # Fast path: perfect squares (the common case during mutation).
    import math

    s = math.isqrt(n)
    if s * s == n:
        return s, 1
    q, r, m, p = 1, 1, n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            q *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    return q, r * m


@dataclass(frozen=True)
class RadicalScalar:
    """Exact value coeff * sqrt(radicand), radicand squarefree and >= 1.

    The zero value is normalized to coeff=0, radicand=1.
    """

    coeff: Fraction
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 1:
            raise ValueError("radicand must be a positive integer")
        if self.coeff == 0 and self.radicand != 1:
            object.__setattr__(self, "radicand", 1)

    @classmethod
    def zero(cls) -> "RadicalScalar":
        return cls(Fraction(0), 1)

    @classmethod
    def sqrt_int(cls, n: int) -> "RadicalScalar":
        """Exact square root of a non-negative integer."""
        q, r = squarefree_decomposition(n)
        return cls(Fraction(q), r)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __neg__(self) -> "RadicalScalar":
        return RadicalScalar(-self.coeff, self.radicand)

    def __add__(self, other: "RadicalScalar") -> "RadicalScalar":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.radicand != other.radicand:
            raise RadicandMismatchError(
                f"cannot add sqrt({self.radicand}) and sqrt({other.radicand}) terms"
            )
        return RadicalScalar(self.coeff + other.coeff, self.radicand)

    def __sub__(self, other: "RadicalScalar") -> "RadicalScalar":
        return self + (-other)

    def __mul__(self, other: "RadicalScalar") -> "RadicalScalar":
        if self.is_zero() or other.is_zero():
            return RadicalScalar.zero()
        q, r = squarefree_decomposition(self.radicand * other.radicand)
        return RadicalScalar(self.coeff * other.coeff * q, r)

    def square(self) -> Fraction:
        """Exact rational square."""
        return self.coeff * self.coeff * self.radicand

    def sign(self) -> int:
        # radicand >= 1, so the sign is the sign of the coefficient.
        return (self.coeff > 0) - (self.coeff < 0)

    def __repr__(self) -> str:
        if self.radicand == 1:
            return f"RadicalScalar({self.coeff})"
        return f"RadicalScalar({self.coeff}*sqrt({self.radicand}))"
