"""Mechanical verification of presentation invariance under mutation.

For an edge (G, x) of a mutation class, the generators of the mutated
diagram's group are expressed inside the original group by conjugation:
t_i = s_x s_i s_x when G has an arrow i -> x, else t_i = s_i.  Every
relation of the mutated presentation is then checked on these images.

Two backends:

* exact: evaluate substituted relators in the integer reflection
  representation of an acyclic weight-4-free class representative (exists
  for finite and affine classes).  An identity matrix for every relator
  proves a homomorphism from the mutated group onto the represented group
  with generating image.
* finite-quotient: check the substituted relators map to the identity under
  every homomorphism of the source group into symmetric groups of bounded
  degree.  A sound necessary condition; the only backend available for the
  exceptional quotient groups, where verification is one-sided.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .canonical import CanonicalKey, canonical_key
from .cycles import chordless_cycles
from .diagram import Diagram, mutate
from .homs import enumerate_homs, evaluate_words_over_homs
from .mutclass import MutationClass, enumerate_class
from .presentation import Presentation, generate_presentation
from .reflection import IntegerReflectionRep
from .words import Word, free_reduce, substitute


@dataclass(frozen=True)
class SubstitutionStep:
    """Replacements induced by one mutation: conjugate into the arrow at x."""

    vertex: int
    replacements: Mapping[int, Word]


def substitution_step(diagram: Diagram, x: int) -> SubstitutionStep:
    replacements = {}
    for i in diagram.vertices():
        arrow = diagram.arrow_between(i, x)
        if arrow is not None and arrow[1] == x:  # arrow i -> x
            replacements[i] = (x, i, x)
        else:
            replacements[i] = (i,)
    return SubstitutionStep(x, replacements)


def track_substitution(seed: Diagram, path: Sequence[int]) -> dict[int, Word]:
    """Words expressing the end diagram's generators in the seed's generators.

    Mutations are involutive, so the path is freely reduced first; composing
    across an immediate backtrack would otherwise pick up a harmless inner
    conjugation (the in-arrow and out-arrow conventions differ by one).
    """
    expr: dict[int, Word] = {i: (i,) for i in seed.vertices()}
    current = seed
    for x in free_reduce(tuple(path)):
        step = substitution_step(current, x)
        expr = {
            i: substitute(step.replacements[i], expr) for i in current.vertices()
        }
        current = mutate(current, x)
    return {i: free_reduce(w) for i, w in expr.items()}


@dataclass(frozen=True)
class RelationOutcome:
    relation_kind: str
    word: Word
    outcome: str  # "holds" | "fails" | "not-decided"
    witness: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    diagram: Diagram
    vertex: int
    backend: str
    outcomes: tuple[RelationOutcome, ...]
    note: str | None = None

    @property
    def ok(self) -> bool:
        return all(o.outcome != "fails" for o in self.outcomes)

    def failures(self) -> list[RelationOutcome]:
        return [o for o in self.outcomes if o.outcome == "fails"]

    def to_json_dict(self) -> dict:
        return {
            "diagram": self.diagram.to_json_dict(),
            "vertex": self.vertex,
            "backend": self.backend,
            "ok": self.ok,
            "note": self.note,
            "relations": [
                {
                    "kind": o.relation_kind,
                    "word": list(o.word),
                    "outcome": o.outcome,
                    "witness": o.witness,
                }
                for o in self.outcomes
            ],
        }


class NoBaseRepresentativeError(RuntimeError):
    """The class has no acyclic weight-4-free member; use finite quotients."""


def _is_acyclic(diagram: Diagram) -> bool:
    return not any(c.oriented for c in chordless_cycles(diagram))


class ClassVerifier:
    """Shared state for verifying all edges of one mutation class."""

    def __init__(
        self,
        seed: Diagram,
        ruleset: str,
        backend: str = "exact",
        degree: int = 4,
        cap: int = 100_000,
        mutation_class: MutationClass | None = None,
    ):
        if backend not in ("exact", "finite-quotient"):
            raise ValueError(f"unknown backend {backend!r}")
        self.ruleset = ruleset
        self.backend = backend
        self.degree = degree
        self.mutation_class = mutation_class or enumerate_class(seed, cap)
        if not self.mutation_class.is_complete():
            raise ValueError(
                f"class enumeration did not complete: {self.mutation_class.status}"
            )
        self._generator_matrices: dict[CanonicalKey, dict[int, np.ndarray]] = {}
        self._hom_cache: dict[CanonicalKey, np.ndarray] = {}
        self._rep: IntegerReflectionRep | None = None
        self._base_key: CanonicalKey | None = None
        if backend == "exact":
            self._init_exact_base()

    # -- exact backend -----------------------------------------------------

    def _init_exact_base(self) -> None:
        candidates = [
            (key, d)
            for key, d in self.mutation_class.representatives.items()
            if d.max_weight() <= 3 and _is_acyclic(d)
        ]
        if not candidates:
            raise NoBaseRepresentativeError(
                "no acyclic weight-4-free representative in the class"
            )
        self._base_key = min(candidates)[0]
        base = self.mutation_class.representatives[self._base_key]
        self._rep = IntegerReflectionRep.from_diagram(base)
        self._generator_matrices[self._base_key] = {
            i: self._rep.generator(i) for i in base.vertices()
        }

    def _matrices_for(self, key: CanonicalKey) -> dict[int, np.ndarray]:
        """Generator images of the keyed representative inside the base group."""
        if key in self._generator_matrices:
            return self._generator_matrices[key]
        base = self.mutation_class.representatives[self._base_key]
        path_to_key = self._path(self._base_key, key)
        mats = {i: self._rep.generator(i) for i in base.vertices()}
        current = base
        for x in path_to_key:
            step = substitution_step(current, x)
            mats = {
                i: (
                    mats[x] @ mats[i] @ mats[x]
                    if len(step.replacements[i]) == 3
                    else mats[i]
                )
                for i in current.vertices()
            }
            current = mutate(current, x)
        self._generator_matrices[key] = mats
        return mats

    def _path(self, from_key: CanonicalKey, to_key: CanonicalKey) -> list[int]:
        """Mutation path between representatives through the BFS tree.

        Paths run seed -> representative; mutation steps are involutive, so
        the reversed seed path prepends exactly.
        """
        up = self.mutation_class.path_from_seed(from_key)
        down = self.mutation_class.path_from_seed(to_key)
        # cancel the common prefix to keep compositions short
        common = 0
        while common < min(len(up), len(down)) and up[common] == down[common]:
            common += 1
        return up[common:][::-1] + down[common:]

    # -- finite-quotient backend --------------------------------------------

    def _homs_for(self, key: CanonicalKey, presentation: Presentation) -> np.ndarray:
        if key not in self._hom_cache:
            self._hom_cache[key] = enumerate_homs(presentation, self.degree)
        return self._hom_cache[key]

    # -- verification --------------------------------------------------------

    def verify_step(self, diagram: Diagram, x: int) -> VerificationReport:
        key = canonical_key(diagram)
        if key not in self.mutation_class.representatives:
            raise ValueError("diagram is not a stored representative of the class")
        mutated = mutate(diagram, x)
        target = generate_presentation(mutated, self.ruleset)
        step = substitution_step(diagram, x)

        if self.backend == "exact":
            mats = dict(self._matrices_for(key))
            images = {
                i: (mats[x] @ mats[i] @ mats[x] if len(step.replacements[i]) == 3 else mats[i])
                for i in diagram.vertices()
            }
            outcomes = []
            for rel in target.relations:
                product = self._rep._identity
                for letter in rel.word:
                    product = product @ images[letter]
                if self._rep.is_identity_matrix(product):
                    outcomes.append(RelationOutcome(rel.kind, rel.word, "holds"))
                else:
                    outcomes.append(
                        RelationOutcome(
                            rel.kind,
                            rel.word,
                            "fails",
                            witness="non-identity matrix in base reflection representation",
                        )
                    )
            return VerificationReport(diagram, x, "exact", tuple(outcomes))

        source = generate_presentation(diagram, self.ruleset)
        homs = self._homs_for(key, source)
        substituted = [
            substitute(rel.word, step.replacements) for rel in target.relations
        ]
        holds = evaluate_words_over_homs(homs, substituted, self.degree)
        outcomes = []
        for idx, rel in enumerate(target.relations):
            row = holds[idx]
            if row.all():
                outcomes.append(RelationOutcome(rel.kind, rel.word, "holds"))
            else:
                bad = int(np.argmin(row))
                outcomes.append(
                    RelationOutcome(
                        rel.kind,
                        rel.word,
                        "fails",
                        witness=f"hom #{bad} into S{self.degree} sends relator to non-identity",
                    )
                )
        note = (
            f"finite-quotient backend (degree <= {self.degree}): necessary "
            "conditions only; verification is one-sided"
        )
        return VerificationReport(diagram, x, "finite-quotient", tuple(outcomes), note)


def verify_invariance_step(
    diagram: Diagram,
    x: int,
    ruleset: str,
    backend: str = "exact",
    degree: int = 4,
    cap: int = 100_000,
) -> VerificationReport:
    """Check every relation of the mutated presentation on substituted images.

    Falls back to the finite-quotient backend when the class has no acyclic
    weight-4-free representative for the exact one.
    """
    try:
        verifier = ClassVerifier(diagram, ruleset, backend, degree, cap)
    except NoBaseRepresentativeError:
        verifier = ClassVerifier(diagram, ruleset, "finite-quotient", degree, cap)
    key = canonical_key(diagram)
    rep = verifier.mutation_class.representatives[key]
    return verifier.verify_step(rep, x)


@dataclass(frozen=True)
class ClassReport:
    seed: Diagram
    ruleset: str
    backend: str
    reports: tuple[VerificationReport, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def edges_checked(self) -> int:
        return len(self.reports)

    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if not r.ok]

    def to_json_dict(self) -> dict:
        return {
            "ruleset": self.ruleset,
            "backend": self.backend,
            "ok": self.ok,
            "edges": self.edges_checked,
            "failures": [r.to_json_dict() for r in self.failures()],
        }


def verify_class(
    seed: Diagram,
    ruleset: str,
    backend: str = "exact",
    degree: int = 4,
    cap: int = 100_000,
) -> ClassReport:
    """Verify every (representative, vertex) edge of the class.

    Iterating all representatives covers each mutation edge from both ends,
    which is the two-directional check: an edge failing in either direction
    is reported.
    """
    try:
        verifier = ClassVerifier(seed, ruleset, backend, degree, cap)
    except NoBaseRepresentativeError:
        verifier = ClassVerifier(seed, ruleset, "finite-quotient", degree, cap)
    reports = []
    for rep in verifier.mutation_class.diagrams():
        for x in rep.vertices():
            reports.append(verifier.verify_step(rep, x))
    return ClassReport(seed, ruleset, verifier.backend, tuple(reports))
