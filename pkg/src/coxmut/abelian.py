"""Abelianization invariants via integer Smith normal form.

The relator exponent-sum matrix (relations x generators) is reduced over Z;
the resulting invariant factors (with divisibility d1 | d2 | ...) classify
the abelianized group, independent of relator order and generator labels.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form (non-negative, d_i | d_{i+1})."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    top = 0
    while top < min(rows, cols):
        # find the nonzero pivot of least absolute value
        pivot = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[top], m[pi] = m[pi], m[top]
        for row in m:
            row[top], row[pj] = row[pj], row[top]
        changed = True
        while changed:
            changed = False
            p = m[top][top]
            for i in range(top + 1, rows):
                q = m[i][top] // p
                if q:
                    for j in range(top, cols):
                        m[i][j] -= q * m[top][j]
                if m[i][top]:
                    m[top], m[i] = m[i], m[top]
                    changed = True
                    break
            if changed:
                continue
            for j in range(top + 1, cols):
                q = m[top][j] // p
                if q:
                    for i in range(top, rows):
                        m[i][j] -= q * m[i][top]
                if m[top][j]:
                    for row in m:
                        row[top], row[j] = row[j], row[top]
                    changed = True
                    break
            if changed:
                continue
            # pivot divides everything in its row/column; enforce divisibility
            for i in range(top + 1, rows):
                bad = next((j for j in range(top + 1, cols) if m[i][j] % p), None)
                if bad is not None:
                    for j in range(top, cols):
                        m[top][j] += m[i][j]
                    changed = True
                    break
        diag.append(abs(m[top][top]))
        top += 1
    while len(diag) < cols:
        diag.append(0)
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors > 1 plus one 0 per free Z summand."""

    factors: tuple[int, ...]

    def __iter__(self):
        return iter(self.factors)

    def __eq__(self, other):
        if isinstance(other, AbelianInvariants):
            return self.factors == other.factors
        return tuple(self.factors) == tuple(other)


def abelian_invariants(presentation) -> AbelianInvariants:
    n = presentation.generators
    rows = []
    for rel in presentation.relations:
        counts = Counter(rel.word)
        rows.append([counts.get(g, 0) for g in range(1, n + 1)])
    if not rows:
        rows = [[0] * n]
    diag = smith_normal_form(rows)
    factors = tuple(d for d in diag if d != 1)
    return AbelianInvariants(factors)
