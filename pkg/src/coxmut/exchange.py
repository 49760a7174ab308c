"""Skew-symmetrizable exchange matrices and the matrix mutation backend.

The diagram-level mutation is the source of truth; the matrix rule here is an
independent cross-check, related by ``weight(i,j) = |b_ij * b_ji|`` with the
arrow pointing from i to j when ``b_ij > 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .diagram import Diagram, InvalidDiagramError


class UnliftableDiagramError(ValueError):
    """No consistent skew-symmetrizable integer matrix realizes the diagram."""


@dataclass(frozen=True)
class ExchangeMatrix:
    b: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]

    @classmethod
    def from_lists(cls, b, d) -> "ExchangeMatrix":
        m = cls(tuple(tuple(int(x) for x in row) for row in b), tuple(int(x) for x in d))
        m.check_skew_symmetrizable()
        return m

    @property
    def n(self) -> int:
        return len(self.b)

    def as_array(self) -> np.ndarray:
        return np.array(self.b, dtype=object)

    def check_skew_symmetrizable(self) -> None:
        n = self.n
        if len(self.d) != n or any(x < 1 for x in self.d):
            raise InvalidDiagramError("symmetrizer must be positive of length n")
        for i in range(n):
            for j in range(n):
                if self.d[i] * self.b[i][j] != -self.d[j] * self.b[j][i]:
                    raise InvalidDiagramError(
                        f"d_i*b_ij != -d_j*b_ji at ({i + 1},{j + 1})"
                    )


def mutate_matrix(matrix: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Standard matrix mutation at vertex k (1-based); symmetrizer unchanged."""
    n = matrix.n
    if not 1 <= k <= n:
        raise InvalidDiagramError(f"vertex {k} out of range 1..{n}")
    kk = k - 1
    b = matrix.b
    new = [
        [
            -b[i][j]
            if i == kk or j == kk
            else b[i][j] + (abs(b[i][kk]) * b[kk][j] + b[i][kk] * abs(b[kk][j])) // 2
            for j in range(n)
        ]
        for i in range(n)
    ]
    return ExchangeMatrix(tuple(tuple(row) for row in new), matrix.d)


def diagram_of(matrix: ExchangeMatrix) -> Diagram:
    """Arrow i -> j of weight |b_ij * b_ji| whenever b_ij > 0."""
    arrows = []
    n = matrix.n
    for i in range(n):
        for j in range(i + 1, n):
            bij, bji = matrix.b[i][j], matrix.b[j][i]
            if bij > 0:
                arrows.append((i + 1, j + 1, abs(bij * bji)))
            elif bij < 0:
                arrows.append((j + 1, i + 1, abs(bij * bji)))
    return Diagram.from_arrows(n, arrows)


def _divisor_pairs(w: int) -> list[tuple[int, int]]:
    """(p, q) with p*q = w, (1, w) first so tree-preferred lifts stay stable."""
    pairs = [(p, w // p) for p in range(1, w + 1) if w % p == 0]
    pairs.sort(key=lambda pq: (pq[0] != 1, pq))
    return pairs


def lift_to_matrix(diagram: Diagram) -> ExchangeMatrix:
    """Realize a diagram by a skew-symmetrizable integer matrix.

    Weight w on an arrow i -> j splits as (b_ij, b_ji) = (p, -q) with
    p*q = w, tied together by the symmetrizer equation d_i p = d_j q.  The
    preferred splitting (1, w) is taken along a spanning tree; when the
    non-tree arrows cannot be made consistent the tree splittings are
    backtracked (cycles can force a different factorization).  Raises
    UnliftableDiagramError when no consistent integer assignment exists.
    """
    n = diagram.n
    order: list[tuple[int, int, int, int, bool]] = []  # (src,dst,w,anchor,is_tree)
    seen: set[int] = set()
    roots: list[int] = []
    for root in diagram.vertices():
        if root in seen:
            continue
        roots.append(root)
        seen.add(root)
        frontier = [root]
        tree_edges: set[tuple[int, int]] = set()
        while frontier:
            v = frontier.pop(0)
            for u in diagram.neighbors(v):
                if u in seen:
                    continue
                src, dst, w = diagram.arrow_between(v, u)
                order.append((src, dst, w, v, True))
                tree_edges.add((min(v, u), max(v, u)))
                seen.add(u)
                frontier.append(u)
    for src, dst, w in diagram.arrows():
        if (min(src, dst), max(src, dst)) not in tree_edges_all(order):
            order.append((src, dst, w, 0, False))

    d_frac: list[Fraction | None] = [None] * n
    for root in roots:
        d_frac[root - 1] = Fraction(1)
    split: dict[tuple[int, int], tuple[int, int]] = {}

    def assign(idx: int) -> bool:
        if idx == len(order):
            return True
        src, dst, w, anchor, is_tree = order[idx]
        i, j = src - 1, dst - 1
        if is_tree:
            for p, q in _divisor_pairs(w):
                # d_src * p = d_dst * q
                if anchor == src:
                    d_frac[j] = d_frac[i] * p / q
                else:
                    d_frac[i] = d_frac[j] * q / p
                split[(src, dst)] = (p, q)
                if assign(idx + 1):
                    return True
            if anchor == src:
                d_frac[j] = None
            else:
                d_frac[i] = None
            split.pop((src, dst), None)
            return False
        # closing arrow: splitting forced by d
        ratio = d_frac[j] / d_frac[i]  # = p / q
        p_over_q = ratio
        # p*q = w and p/q = ratio  =>  p^2 = w * ratio
        p_sq = p_over_q * w
        if p_sq.denominator != 1:
            return False
        p = math.isqrt(p_sq.numerator)
        if p == 0 or p * p != p_sq.numerator or w % p != 0:
            return False
        split[(src, dst)] = (p, w // p)
        return assign(idx + 1)

    if not assign(0):
        raise UnliftableDiagramError(
            "no skew-symmetrizable integer matrix realizes this diagram"
        )

    b = [[0] * n for _ in range(n)]
    for (src, dst), (p, q) in split.items():
        b[src - 1][dst - 1] = p
        b[dst - 1][src - 1] = -q
    scale = math.lcm(*(x.denominator for x in d_frac))
    d = [int(x * scale) for x in d_frac]
    g = math.gcd(*d)
    d = [x // g for x in d]

    matrix = ExchangeMatrix(tuple(tuple(row) for row in b), tuple(d))
    matrix.check_skew_symmetrizable()
    if diagram_of(matrix) != diagram:
        raise UnliftableDiagramError("lift does not reproduce the diagram")
    return matrix


def tree_edges_all(order: list) -> set[tuple[int, int]]:
    return {
        (min(src, dst), max(src, dst)) for src, dst, _, _, is_tree in order if is_tree
    }
