"""Immutable weighted directed diagrams and exact mutation.

A diagram has vertices 1..n and at most one weighted arrow per vertex pair.
Arrows are stored by unordered pair with a signed direction, so "no parallel
arrows" holds by construction.  Mutation follows the local exchange rule: the
signed square roots of the weights around the mutated vertex satisfy
``(+/-)sqrt(c) (+/-) sqrt(d) = sqrt(ab)`` with positive sign exactly when the
three vertices form an oriented cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .radical import RadicalScalar, RadicandMismatchError


class InvalidDiagramError(ValueError):
    """Raised when an operation meets a structurally invalid diagram."""


Arrow = tuple[int, int, int]  # (from, to, weight)


@dataclass(frozen=True)
class Diagram:
    """Directed graph with positive integer weights, vertices 1..n.

    ``pairs`` maps each unordered pair (i, j) with i < j to (source, weight).
    """

    n: int
    pairs: Mapping[tuple[int, int], tuple[int, int]]

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[Arrow]) -> "Diagram":
        if n < 1:
            raise InvalidDiagramError("vertex count must be positive")
        pairs: dict[tuple[int, int], tuple[int, int]] = {}
        for src, dst, weight in arrows:
            if src == dst:
                raise InvalidDiagramError(f"self-arrow at vertex {src}")
            for v in (src, dst):
                if not 1 <= v <= n:
                    raise InvalidDiagramError(f"vertex {v} out of range 1..{n}")
            if weight < 1:
                raise InvalidDiagramError(f"non-positive weight on {src}->{dst}")
            key = (src, dst) if src < dst else (dst, src)
            if key in pairs:
                raise InvalidDiagramError(f"duplicate arrow between {key[0]} and {key[1]}")
            pairs[key] = (src, weight)
        return cls(n, _freeze(pairs))

    def arrows(self) -> list[Arrow]:
        """Arrows as (from, to, weight), sorted by (from, to)."""
        out = []
        for (i, j), (src, w) in self.pairs.items():
            dst = j if src == i else i
            out.append((src, dst, w))
        out.sort()
        return out

    def arrow_between(self, i: int, j: int) -> Arrow | None:
        key = (i, j) if i < j else (j, i)
        entry = self.pairs.get(key)
        if entry is None:
            return None
        src, w = entry
        dst = key[1] if src == key[0] else key[0]
        return (src, dst, w)

    def weight(self, i: int, j: int) -> int:
        arrow = self.arrow_between(i, j)
        return arrow[2] if arrow else 0

    def neighbors(self, v: int) -> list[int]:
        out = []
        for i, j in self.pairs:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        out.sort()
        return out

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def max_weight(self) -> int:
        return max((w for _, w in self.pairs.values()), default=0)

    def is_simply_laced(self) -> bool:
        return all(w == 1 for _, w in self.pairs.values())

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.pairs.items()))))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.n == other.n and dict(self.pairs) == dict(other.pairs)

    # -- JSON contract -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "arrows": [
                {"from": src, "to": dst, "weight": w} for src, dst, w in self.arrows()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "Diagram":
        try:
            n = int(data["n"])
            arrows = [
                (int(a["from"]), int(a["to"]), int(a["weight"])) for a in data["arrows"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDiagramError(f"malformed diagram JSON: {exc}") from exc
        return cls.from_arrows(n, arrows)

    @classmethod
    def from_json(cls, text: str) -> "Diagram":
        return cls.from_json_dict(json.loads(text))


def _freeze(pairs: dict) -> Mapping:
    # dict is kept; immutability is by convention (dataclass frozen, never mutated).
    return dict(pairs)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[tuple[tuple[int, ...], int], ...]  # (cycle vertices, product)

    def __bool__(self) -> bool:
        return self.ok


def validate(diagram: Diagram) -> ValidationReport:
    """Check the perfect-square condition on every chordless cycle.

    Structural invariants (no self-arrows, single arrow per pair, index range)
    hold by construction; this reports the weight-product condition.
    """
    from .cycles import chordless_cycles

    violations = []
    for cycle in chordless_cycles(diagram):
        product = 1
        for w in cycle.weights:
            product *= w
        q, r = _square_split(product)
        if r != 1:
            violations.append((cycle.vertices, product))
    return ValidationReport(not violations, tuple(violations))


def _square_split(n: int) -> tuple[int, int]:
    from .radical import squarefree_decomposition

    return squarefree_decomposition(n)


def mutate(diagram: Diagram, k: int) -> Diagram:
    """Mutation at vertex k: involutive, exact, validity-preserving."""
    if not 1 <= k <= diagram.n:
        raise InvalidDiagramError(f"vertex {k} out of range 1..{diagram.n}")

    incoming = []  # i with arrow i -> k
    outgoing = []  # j with arrow k -> j
    for v in diagram.neighbors(k):
        src, dst, w = diagram.arrow_between(v, k)
        if dst == k:
            incoming.append((v, w))
        else:
            outgoing.append((v, w))

    new_arrows: dict[tuple[int, int], tuple[int, int]] = {}
    for (i, j), (src, w) in diagram.pairs.items():
        if i == k or j == k:
            # reverse every arrow incident to k
            dst = j if src == i else i
            new_arrows[(i, j)] = (dst, w)
        else:
            new_arrows[(i, j)] = (src, w)

    for i, a in incoming:
        for j, b in outgoing:
            if i == j:
                continue
            key = (i, j) if i < j else (j, i)
            existing = diagram.arrow_between(i, j)
            if existing is None:
                s_old = RadicalScalar.zero()
            elif existing[0] == j:  # j -> i closes the oriented cycle i -> k -> j -> i
                s_old = RadicalScalar.sqrt_int(existing[2])
            else:
                s_old = -RadicalScalar.sqrt_int(existing[2])
            try:
                s_new = RadicalScalar.sqrt_int(a * b) - s_old
            except RadicandMismatchError as exc:
                raise InvalidDiagramError(
                    f"mutation at {k} hit mismatched radicands on pair {key}; "
                    "input diagram violates the perfect-square condition"
                ) from exc
            weight = s_new.square()
            if weight.denominator != 1:
                raise InvalidDiagramError("non-integer weight produced by mutation")
            w_int = int(weight)
            sign = s_new.sign()
            if sign > 0:
                new_arrows[key] = (i, w_int)
            elif sign < 0:
                new_arrows[key] = (j, w_int)
            else:
                new_arrows.pop(key, None)

    return Diagram(diagram.n, _freeze(new_arrows))


def mutate_path(diagram: Diagram, path: Sequence[int]) -> Diagram:
    for k in path:
        diagram = mutate(diagram, k)
    return diagram


def opposite(diagram: Diagram) -> Diagram:
    """Reverse every arrow, keeping weights."""
    return Diagram.from_arrows(
        diagram.n, [(dst, src, w) for src, dst, w in diagram.arrows()]
    )


def permute(diagram: Diagram, perm: Mapping[int, int]) -> Diagram:
    """Relabel vertices by the permutation v -> perm[v]."""
    return Diagram.from_arrows(
        diagram.n, [(perm[src], perm[dst], w) for src, dst, w in diagram.arrows()]
    )


def induced_subdiagram(
    diagram: Diagram, subset: Iterable[int]
) -> tuple[Diagram, dict[int, int]]:
    """Induced subdiagram on ``subset``, reindexed to 1..|subset|.

    Returns the subdiagram together with the map old index -> new index.
    """
    vertices = sorted(set(subset))
    if not vertices:
        raise InvalidDiagramError("subset must be non-empty")
    index = {v: i + 1 for i, v in enumerate(vertices)}
    for v in vertices:
        if not 1 <= v <= diagram.n:
            raise InvalidDiagramError(f"vertex {v} out of range 1..{diagram.n}")
    keep = set(vertices)
    arrows = [
        (index[src], index[dst], w)
        for src, dst, w in diagram.arrows()
        if src in keep and dst in keep
    ]
    return Diagram.from_arrows(len(vertices), arrows), index


def restriction(diagram: Diagram, subset: Iterable[int]) -> Diagram:
    """Induced subdiagram keeping original vertex labels (n unchanged)."""
    keep = set(subset)
    return Diagram.from_arrows(
        diagram.n,
        [(s, d, w) for s, d, w in diagram.arrows() if s in keep and d in keep],
    )
