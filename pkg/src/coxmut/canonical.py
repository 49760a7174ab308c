"""Permutation-invariant canonical keys for small diagrams.

Vertices are first partitioned by iterated refinement on local invariants
(incident weight/direction multisets), then a lexicographically least arrow
encoding is taken over the remaining relabelings.  The search individualizes
one vertex of the first ambiguous class at a time and re-refines, which
prunes the factorial exhaustion without changing the minimum.
"""

from __future__ import annotations

from .diagram import Diagram

MAX_CANONICAL_VERTICES = 16


class CanonicalKey(bytes):
    """Byte string identifying a diagram up to isomorphism."""

    def hex_digest(self) -> str:
        return self.hex()


def _refine(diagram: Diagram, colors: dict[int, int]) -> dict[int, int]:
    n = diagram.n
    while True:
        signatures = {}
        for v in diagram.vertices():
            profile = []
            for u in diagram.neighbors(v):
                src, _, w = diagram.arrow_between(v, u)
                profile.append((w, 1 if src == v else -1, colors[u]))
            profile.sort()
            signatures[v] = (colors[v], tuple(profile))
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures.values())))}
        new_colors = {v: ranking[signatures[v]] for v in diagram.vertices()}
        if new_colors == colors:
            return colors
        colors = new_colors


def _encode(diagram: Diagram, order: dict[int, int]) -> bytes:
    arrows = sorted(
        (order[src], order[dst], w) for src, dst, w in diagram.arrows()
    )
    payload = bytearray([diagram.n])
    for a, b, w in arrows:
        payload.extend((a, b, min(w, 255)))
        if w > 255:  # unbounded weights: spill the full value
            payload.extend(str(w).encode())
            payload.append(0)
    return bytes(payload)


def _search(diagram: Diagram, colors: dict[int, int], best: list[bytes | None]) -> None:
    classes: dict[int, list[int]] = {}
    for v, c in colors.items():
        classes.setdefault(c, []).append(v)
    ambiguous = [c for c, vs in sorted(classes.items()) if len(vs) > 1]
    if not ambiguous:
        order = {v: colors[v] + 1 for v in colors}
        encoded = _encode(diagram, order)
        if best[0] is None or encoded < best[0]:
            best[0] = encoded
        return
    target = ambiguous[0]
    for v in sorted(classes[target]):
        branched = dict(colors)
        branched[v] = -1  # individualize ahead of the whole class
        ranking = {c: r for r, c in enumerate(sorted(set(branched.values())))}
        branched = {u: ranking[c] for u, c in branched.items()}
        _search(diagram, _refine(diagram, branched), best)


def canonical_key(diagram: Diagram) -> CanonicalKey:
    if diagram.n > MAX_CANONICAL_VERTICES:
        raise ValueError(
            f"canonical keys support at most {MAX_CANONICAL_VERTICES} vertices"
        )
    colors = _refine(diagram, {v: 0 for v in diagram.vertices()})
    best: list[bytes | None] = [None]
    _search(diagram, colors, best)
    assert best[0] is not None
    return CanonicalKey(best[0])


def are_isomorphic(a: Diagram, b: Diagram) -> bool:
    return a.n == b.n and canonical_key(a) == canonical_key(b)
