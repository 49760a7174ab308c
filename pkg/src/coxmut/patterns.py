"""Subdiagram patterns that trigger additional relations.

Each family is a hard-coded diagram constructor (parametric in n for the two
infinite families) together with its relation-word templates over the
pattern's own labels.  Matching is exact induced-subdiagram isomorphism,
orientation- and weight-preserving; matches are deduplicated per vertex set,
since maps differing by a pattern automorphism yield equivalent relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .diagram import Diagram
from .words import Word

A22 = "A~22"
D_TILDE = "D~n"
B3_TILDE = "B~3"
B_TILDE = "B~n"
G2_TILDE = "G~2"
HANDLE = "Handle-H"
X5 = "X5"

TABLE_FAMILIES = (A22, D_TILDE, B3_TILDE, B_TILDE, G2_TILDE)


@dataclass(frozen=True)
class PatternSpec:
    family: str
    n: int | None
    diagram: Diagram
    words: tuple[tuple[Word, int], ...]  # (base word, exponent) pairs


@dataclass(frozen=True)
class PatternMatch:
    pattern: str
    n: int | None
    vertices: tuple[int, ...]  # image of pattern label i at position i-1

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def to_json_dict(self) -> dict:
        data = {"pattern": self.pattern, "vertices": list(self.vertices)}
        if self.n is not None:
            data["n"] = self.n
        return data


def pattern_a22() -> PatternSpec:
    diagram = Diagram.from_arrows(
        4, [(1, 3, 4), (3, 2, 1), (2, 1, 1), (3, 4, 1), (4, 1, 1)]
    )
    return PatternSpec(A22, None, diagram, (((1, 2, 3, 4, 3, 2), 2),))


def pattern_d_tilde(n: int) -> PatternSpec:
    """Two commuting tails on the reversed edge of a big cycle; n+1 vertices.

    Labels: 1, 2 are the tails; 3..n+1 the big cycle with source 3 and sink
    n+1.  Relation: (s1 s2 s3 s2 s1 * s4 s5...sn s_{n+1} sn...s5 s4)^2.
    """
    if n < 4:
        raise ValueError("D~n needs n >= 4")
    arrows = [(n + 1, 1, 1), (1, 3, 1), (n + 1, 2, 1), (2, 3, 1), (3, n + 1, 1)]
    arrows += [(i, i + 1, 1) for i in range(3, n + 1)]
    word = (1, 2, 3, 2, 1) + tuple(range(4, n + 2)) + tuple(range(n, 3, -1))
    return PatternSpec(D_TILDE, n, Diagram.from_arrows(n + 1, arrows), ((word, 2),))


def pattern_b3() -> PatternSpec:
    diagram = Diagram.from_arrows(
        4, [(1, 3, 4), (3, 2, 2), (2, 1, 2), (3, 4, 1), (4, 1, 1)]
    )
    return PatternSpec(
        B3_TILDE, None, diagram, (((2, 3, 4, 1, 4, 3), 2), ((2, 1, 4, 3, 4, 1), 2))
    )


def pattern_b_tilde(n: int) -> PatternSpec:
    """Simple n-cycle with source 1 and sink n, plus a weight-2 tail n+1.

    Relation: (s_{n+1} s1 s_{n+1} * s2 s3...s_{n-1} sn s_{n-1}...s3 s2)^2.
    """
    if n < 3:
        raise ValueError("B~n needs n >= 3")
    arrows = [(i, i + 1, 1) for i in range(1, n)]
    arrows += [(1, n, 1), (n, n + 1, 2), (n + 1, 1, 2)]
    word = (n + 1, 1, n + 1) + tuple(range(2, n + 1)) + tuple(range(n - 1, 1, -1))
    return PatternSpec(B_TILDE, n, Diagram.from_arrows(n + 1, arrows), ((word, 2),))


def pattern_g2() -> PatternSpec:
    diagram = Diagram.from_arrows(3, [(1, 2, 3), (2, 3, 3), (3, 1, 4)])
    return PatternSpec(
        G2_TILDE, None, diagram, (((2, 1, 2, 1, 2, 3), 2), ((2, 3, 2, 3, 2, 1), 2))
    )


def pattern_handle() -> PatternSpec:
    """Triangulated-handle diagram; mutating at 5 gives the A~22 risk diagram.

    The labeling is pinned mechanically: among all relabelings, exactly this
    one (up to the equivalence the relations themselves generate) makes both
    handle relations consequences across the whole mutation class of the
    handle under finite-quotient checks, with vertex 5 the unique vertex
    whose mutation reaches the risk diagram.
    """
    diagram = Diagram.from_arrows(
        5,
        [
            (2, 4, 4), (1, 2, 1), (1, 3, 1), (4, 1, 1), (4, 3, 1),
            (3, 2, 1), (3, 5, 1), (5, 1, 1),
        ],
    )
    return PatternSpec(
        HANDLE,
        None,
        diagram,
        (((1, 2, 3, 4, 5, 4, 3, 2), 3), ((1, 4, 3, 2, 5, 2, 3, 4), 3)),
    )


def pattern_x5() -> PatternSpec:
    """Two weight-4 blades through a hub (labels: hub 1, blades {2,3}, {4,5})."""
    diagram = Diagram.from_arrows(
        5, [(1, 2, 1), (2, 3, 4), (3, 1, 1), (1, 4, 1), (4, 5, 4), (5, 1, 1)]
    )
    return PatternSpec(
        X5,
        None,
        diagram,
        (((2, 1, 3, 1, 2, 4, 1, 5, 1, 4), 2), ((3, 1, 2, 1, 3, 5, 1, 4, 1, 5), 2)),
    )


def pattern_specs(family: str, max_vertices: int) -> list[PatternSpec]:
    if family == A22:
        return [pattern_a22()] if max_vertices >= 4 else []
    if family == B3_TILDE:
        return [pattern_b3()] if max_vertices >= 4 else []
    if family == G2_TILDE:
        return [pattern_g2()] if max_vertices >= 3 else []
    if family == HANDLE:
        return [pattern_handle()] if max_vertices >= 5 else []
    if family == X5:
        return [pattern_x5()] if max_vertices >= 5 else []
    if family == D_TILDE:
        return [pattern_d_tilde(n) for n in range(4, max_vertices)]
    if family == B_TILDE:
        return [pattern_b_tilde(n) for n in range(3, max_vertices)]
    raise ValueError(f"unknown pattern family {family!r}")


def _match_spec(diagram: Diagram, spec: PatternSpec) -> list[PatternMatch]:
    pat = spec.diagram
    k = pat.n
    # map pattern vertices in a connectivity-first order
    order = [1]
    while len(order) < k:
        nxt = min(
            v
            for v in pat.vertices()
            if v not in order and any(u in order for u in pat.neighbors(v))
        )
        order.append(nxt)
    pos = {v: i for i, v in enumerate(order)}

    matches: dict[frozenset[int], tuple[int, ...]] = {}
    assignment: list[int] = []

    def descend() -> None:
        if len(assignment) == k:
            image = tuple(assignment[pos[v]] for v in range(1, k + 1))
            key = frozenset(image)
            if key not in matches or image < matches[key]:
                matches[key] = image
            return
        pv = order[len(assignment)]
        used = set(assignment)
        for cand in diagram.vertices():
            if cand in used:
                continue
            ok = True
            for prev_idx, dv in enumerate(assignment):
                pu = order[prev_idx]
                want = pat.arrow_between(pv, pu)
                have = diagram.arrow_between(cand, dv)
                if want is None:
                    if have is not None:
                        ok = False
                        break
                else:
                    src, _, w = want
                    expect = (cand, dv, w) if src == pv else (dv, cand, w)
                    if have != expect:
                        ok = False
                        break
            if ok:
                assignment.append(cand)
                descend()
                assignment.pop()

    descend()
    return [
        PatternMatch(spec.family, spec.n, image)
        for image in sorted(matches.values())
    ]


def match_patterns(diagram: Diagram, families: Iterable[str]) -> list[PatternMatch]:
    """All induced occurrences of the requested families, one per vertex set."""
    out: list[PatternMatch] = []
    for family in families:
        for spec in pattern_specs(family, diagram.n):
            out.extend(_match_spec(diagram, spec))
    return out


def relation_words(match: PatternMatch) -> list[tuple[Word, int]]:
    """Relation words of a match, instantiated through its vertex map."""
    spec_by_family = {
        A22: pattern_a22,
        B3_TILDE: pattern_b3,
        G2_TILDE: pattern_g2,
        HANDLE: pattern_handle,
        X5: pattern_x5,
    }
    if match.pattern == D_TILDE:
        spec = pattern_d_tilde(match.n)
    elif match.pattern == B_TILDE:
        spec = pattern_b_tilde(match.n)
    else:
        spec = spec_by_family[match.pattern]()
    phi = dict(zip(range(1, spec.diagram.n + 1), match.vertices))
    return [
        (tuple(phi[letter] for letter in base), exponent)
        for base, exponent in spec.words
    ]
