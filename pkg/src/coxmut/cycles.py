"""Chordless cycle extraction.

A chordless cycle is a vertex subset whose induced subdiagram is exactly a
cycle graph.  Oriented cycles are reported with their vertices in arrow
order; non-oriented ones in a deterministic rotation.  These feed the cycle
relations, so the weight sequence is kept aligned with the vertex sequence:
``weights[i]`` is the weight between ``vertices[i]`` and ``vertices[i+1]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram


@dataclass(frozen=True)
class ChordlessCycle:
    vertices: tuple[int, ...]
    oriented: bool
    weights: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def weight_signature(self) -> tuple[int, ...]:
        """Lex-least weight sequence over rotations and reversal.

        Two oriented cycles are isomorphic as diagrams exactly when their
        weight sequences agree up to this dihedral normalization.
        """
        d = len(self.weights)
        candidates = []
        for seq in (self.weights, self.weights[::-1]):
            for r in range(d):
                candidates.append(seq[r:] + seq[:r])
        return min(candidates)


def chordless_cycles(diagram: Diagram) -> list[ChordlessCycle]:
    """All chordless cycles, found by growing chordless paths."""
    adjacency = {v: set(diagram.neighbors(v)) for v in diagram.vertices()}
    cycles: list[ChordlessCycle] = []

    def extend(path: list[int], blocked: set[int]) -> None:
        last = path[-1]
        start = path[0]
        for nxt in sorted(adjacency[last]):
            if nxt < start or nxt in blocked:
                continue
            if nxt == path[1]:
                continue
            closes = start in adjacency[nxt]
            # chordless: nxt may touch the path only at `last` (and `start`
            # when closing the cycle)
            touches = adjacency[nxt] & set(path)
            allowed = {last} | ({start} if closes else set())
            if touches - allowed:
                continue
            if closes and len(path) >= 2:
                if path[1] < nxt:  # each cycle once, fixing traversal direction
                    cycles.append(_orient(diagram, path + [nxt]))
                continue
            extend(path + [nxt], blocked | {nxt})

    for start in diagram.vertices():
        for second in sorted(adjacency[start]):
            if second < start:
                continue
            extend([start, second], {start, second})
    return cycles


def _orient(diagram: Diagram, loop: list[int]) -> ChordlessCycle:
    d = len(loop)
    forward = 0
    for idx in range(d):
        src, dst, _ = diagram.arrow_between(loop[idx], loop[(idx + 1) % d])
        if src == loop[idx]:
            forward += 1
    if forward == d:
        seq = loop
        oriented = True
    elif forward == 0:
        seq = [loop[0]] + loop[:0:-1]
        oriented = True
    else:
        seq = loop
        oriented = False
    # rotate so the smallest vertex leads; the traversal direction of an
    # oriented cycle is pinned by its arrows, a non-oriented one by the search
    start = seq.index(min(seq))
    seq = seq[start:] + seq[:start]
    weights = tuple(
        diagram.weight(seq[i], seq[(i + 1) % d]) for i in range(d)
    )
    return ChordlessCycle(tuple(seq), oriented, weights)


def chordless_cycles_bruteforce(diagram: Diagram) -> list[ChordlessCycle]:
    """Oracle: test every vertex subset for inducing a cycle graph."""
    from itertools import combinations

    found = []
    vertices = list(diagram.vertices())
    adjacency = {v: set(diagram.neighbors(v)) for v in vertices}
    for size in range(3, diagram.n + 1):
        for subset in combinations(vertices, size):
            inside = set(subset)
            degrees = [len(adjacency[v] & inside) for v in subset]
            if any(deg != 2 for deg in degrees):
                continue
            # connected 2-regular graph on `size` vertices = one cycle
            seen = {subset[0]}
            frontier = [subset[0]]
            while frontier:
                v = frontier.pop()
                for u in adjacency[v] & inside:
                    if u not in seen:
                        seen.add(u)
                        frontier.append(u)
            if len(seen) != size:
                continue
            loop = [subset[0]]
            prev = None
            while len(loop) < size:
                nxt = min(u for u in adjacency[loop[-1]] & inside if u != prev)
                prev = loop[-1]
                loop.append(nxt)
            found.append(_orient(diagram, loop))
    return found
