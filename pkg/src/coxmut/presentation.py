"""Group presentations generated from diagrams.

A diagram presents a group on one involution per vertex: pair relations
from arrow weights (R2), cycle relations from oriented chordless cycles
(R3), and pattern relations from distinguished subdiagrams (R4/R5/R5*).
Rulesets gate which pattern families are consulted:

* ``finite-affine``       -- affine pattern table only
* ``unpunctured-surface`` -- affine table plus the handle diagram
* ``exceptional``         -- affine table plus the X5 diagram
* ``auto``                -- pick by classification, refusing when unclear
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .cycles import ChordlessCycle, chordless_cycles
from .diagram import Diagram, InvalidDiagramError, validate
from .patterns import (
    HANDLE,
    TABLE_FAMILIES,
    X5,
    PatternMatch,
    match_patterns,
    relation_words,
)
from .radical import RadicalScalar
from .words import Word, free_reduce, normalize_relator

RULESETS = ("finite-affine", "unpunctured-surface", "exceptional")

EXPONENT_BY_WEIGHT = {0: 2, 1: 3, 2: 4, 3: 6}
EXPONENT_BY_T = {0: 2, 1: 3, 2: 4, 3: 6}


class RulesetError(ValueError):
    """Unknown ruleset, or `auto` could not settle on one."""


def coxeter_exponent(weight: int) -> int | None:
    """Pair exponent m_ij from the arrow weight; None for weight 4 (no R2)."""
    if weight == 4:
        return None
    if weight not in EXPONENT_BY_WEIGHT:
        raise ValueError(
            f"arrow weight {weight} outside 0..4: not a mutation-finite input"
        )
    return EXPONENT_BY_WEIGHT[weight]


@dataclass(frozen=True)
class Relation:
    kind: str  # R1 | R2 | R3 | R4 | R5 | R5* | quotient
    base: Word
    exponent: int
    source: tuple[int, ...]
    pattern: str | None = None
    t: int | None = None
    m: int | None = None
    l: int | None = None

    @property
    def word(self) -> Word:
        return self.base * self.exponent

    def render(self) -> str:
        inner = " ".join(f"s{i}" for i in self.base)
        if self.exponent == 1:
            return inner
        return f"({inner})^{self.exponent}"

    def to_json_dict(self) -> dict:
        data = {
            "kind": self.kind,
            "word": list(self.word),
            "source": list(self.source),
        }
        if self.t is not None:
            data["t"] = self.t
        if self.m is not None:
            data["m"] = self.m
        return data


@dataclass(frozen=True)
class Presentation:
    generators: int
    relations: tuple[Relation, ...]
    ruleset: str

    def words(self) -> list[Word]:
        return [rel.word for rel in self.relations]

    def by_kind(self, kind: str) -> list[Relation]:
        return [rel for rel in self.relations if rel.kind == kind]

    def normalized_relators(self) -> set[Word]:
        return {normalize_relator(rel.word) for rel in self.relations}

    def to_json_dict(self) -> dict:
        return {
            "generators": self.generators,
            "relations": [rel.to_json_dict() for rel in self.relations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def render(self) -> str:
        lines = [f"generators: {', '.join(f's{i}' for i in range(1, self.generators + 1))}"]
        for rel in self.relations:
            lines.append(f"  [{rel.kind}] {rel.render()} = e")
        return "\n".join(lines)

    def relabeled(self, perm: Mapping[int, int]) -> "Presentation":
        rels = tuple(
            replace(
                rel,
                base=tuple(perm[x] for x in rel.base),
                source=tuple(perm[x] for x in rel.source),
            )
            for rel in self.relations
        )
        return Presentation(self.generators, rels, self.ruleset)


def cycle_relation_params(cycle: ChordlessCycle) -> list[tuple[int, int, int]]:
    """(l, t, m) for each starting offset with t(l) < 4.

    t(l) is the square of the difference between the square root of the
    product of d-1 consecutive weights from position l and the square root
    of the remaining closing weight; on a valid diagram it is an integer.
    """
    if not cycle.oriented:
        raise ValueError("cycle relations require an oriented cycle")
    d = len(cycle)
    out = []
    for l in range(d):
        product = 1
        for j in range(l, l + d - 1):
            product *= cycle.weights[j % d]
        closing = cycle.weights[(l - 1) % d]
        t_val = (RadicalScalar.sqrt_int(product) - RadicalScalar.sqrt_int(closing)).square()
        if t_val.denominator != 1:
            raise InvalidDiagramError(
                f"non-integer cycle exponent on {cycle.vertices}: invalid diagram"
            )
        t_int = int(t_val)
        if t_int < 4:
            out.append((l, t_int, EXPONENT_BY_T[t_int]))
    return out


def _cycle_base_word(cycle: ChordlessCycle, l: int) -> Word:
    d = len(cycle)
    idx = [cycle.vertices[(l + j) % d] for j in range(d)]
    return tuple(idx) + tuple(reversed(idx[1:-1]))


def families_for_ruleset(ruleset: str) -> tuple[str, ...]:
    if ruleset == "finite-affine":
        return TABLE_FAMILIES
    if ruleset == "unpunctured-surface":
        return TABLE_FAMILIES + (HANDLE,)
    if ruleset == "exceptional":
        return TABLE_FAMILIES + (X5,)
    raise RulesetError(f"unknown ruleset {ruleset!r}")


def generate_presentation(
    diagram: Diagram, ruleset: str = "finite-affine"
) -> Presentation:
    """Presentation of the group attached to the diagram under the ruleset."""
    if ruleset == "auto":
        ruleset = _auto_ruleset(diagram)
    if ruleset not in RULESETS:
        raise RulesetError(f"unknown ruleset {ruleset!r}")
    report = validate(diagram)
    if not report.ok:
        raise InvalidDiagramError(f"invalid diagram: {report.violations}")

    relations: list[Relation] = []
    seen: set[Word] = set()

    def emit(rel: Relation) -> None:
        if rel.kind == "R1":
            # the involution squares themselves; reduction would erase them
            relations.append(rel)
            return
        key = normalize_relator(rel.word)
        if key and key not in seen:
            seen.add(key)
            relations.append(rel)

    for v in diagram.vertices():
        emit(Relation("R1", (v,), 2, (v,)))

    for i in diagram.vertices():
        for j in range(i + 1, diagram.n + 1):
            m = coxeter_exponent(diagram.weight(i, j))
            if m is not None:
                emit(Relation("R2", (i, j), m, (i, j), m=m))

    cycles = sorted(
        (c for c in chordless_cycles(diagram) if c.oriented),
        key=lambda c: c.vertices,
    )
    for cycle in cycles:
        for l, t, m in cycle_relation_params(cycle):
            emit(
                Relation(
                    "R3",
                    _cycle_base_word(cycle, l),
                    m,
                    cycle.vertices,
                    t=t,
                    m=m,
                    l=l,
                )
            )

    kinds = {HANDLE: "R5", X5: "R5*"}
    for match in match_patterns(diagram, families_for_ruleset(ruleset)):
        kind = kinds.get(match.pattern, "R4")
        for base, exponent in relation_words(match):
            emit(
                Relation(
                    kind,
                    base,
                    exponent,
                    match.vertices,
                    pattern=match.pattern,
                    m=exponent,
                )
            )

    return Presentation(diagram.n, tuple(relations), ruleset)


def _auto_ruleset(diagram: Diagram) -> str:
    from .mutclass import ClassificationInconclusive, classify

    try:
        tag = classify(diagram)
    except ClassificationInconclusive as exc:
        raise RulesetError(f"auto ruleset: {exc}") from exc
    if tag.family in ("finite", "affine"):
        return "finite-affine"
    if tag.family == "exceptional":
        return "exceptional"
    raise RulesetError(
        f"auto ruleset: classification {tag} does not determine a ruleset; "
        "pass one explicitly (surface origin is a user assertion)"
    )


def omit_r4(presentation: Presentation) -> Presentation:
    """Drop the additional affine relations (R4), keeping everything else."""
    rels = tuple(rel for rel in presentation.relations if rel.kind != "R4")
    return Presentation(presentation.generators, rels, presentation.ruleset)


def reduce_cycle_relations(
    presentation: Presentation, diagram: Diagram
) -> Presentation:
    """Keep one cycle relation per oriented chordless cycle where justified.

    Per cycle: the least-l relation with m = 2 when one exists; the least-l
    relation when every offset gives m = 3; the m = 3 relation for the
    (3,3,4) cycle whose other relations follow from its pattern relations.
    Cycles matching none of these keep all their relations.
    """
    grouped: dict[tuple[int, ...], list[Relation]] = {}
    order: list[Relation] = []
    for rel in presentation.relations:
        if rel.kind == "R3":
            grouped.setdefault(rel.source, []).append(rel)
        order.append(rel)

    keep: dict[tuple[int, ...], set[int]] = {}
    for source, rels in grouped.items():
        ms = sorted(rel.m for rel in rels)
        d = len(source)
        if any(rel.m == 2 for rel in rels):
            chosen = min((rel for rel in rels if rel.m == 2), key=lambda r: r.l)
        elif len(rels) == d and all(rel.m == 3 for rel in rels):
            chosen = min(rels, key=lambda r: r.l)
        elif ms == [3, 6, 6]:
            chosen = next(rel for rel in rels if rel.m == 3)
        else:
            keep[source] = {id(rel) for rel in rels}
            continue
        keep[source] = {id(chosen)}

    rels = tuple(
        rel
        for rel in order
        if rel.kind != "R3" or id(rel) in keep[rel.source]
    )
    return Presentation(presentation.generators, rels, presentation.ruleset)


def quotient(presentation: Presentation, extra: Iterable[Sequence[int]]) -> Presentation:
    """Append relators (quotient by their normal closure)."""
    rels = list(presentation.relations)
    for word in extra:
        w = free_reduce(tuple(int(x) for x in word))
        rels.append(Relation("quotient", w, 1, tuple(sorted(set(w)))))
    return Presentation(presentation.generators, tuple(rels), presentation.ruleset)


def coxeter_presentation(matrix: Sequence[Sequence[int]]) -> Presentation:
    """Plain Coxeter presentation from a symmetric matrix of exponents.

    Entry m_ij >= 2 yields (s_i s_j)^m_ij; diagonal entries are ignored.
    """
    n = len(matrix)
    rels: list[Relation] = [Relation("R1", (i,), 2, (i,)) for i in range(1, n + 1)]
    for i in range(n):
        for j in range(i + 1, n):
            m = matrix[i][j]
            if matrix[j][i] != m:
                raise ValueError("Coxeter matrix must be symmetric")
            if m < 2:
                raise ValueError("off-diagonal Coxeter exponents must be >= 2")
            rels.append(Relation("R2", (i + 1, j + 1), m, (i + 1, j + 1), m=m))
    return Presentation(n, tuple(rels), "coxeter")
