"""Mutation-class enumeration, mutation-finiteness, and type classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .canonical import CanonicalKey, canonical_key
from .cycles import chordless_cycles
from .diagram import Diagram, mutate

DEFAULT_CLASS_CAP = 100_000


@dataclass(frozen=True)
class MutationClass:
    """BFS closure of a seed under single mutations, up to isomorphism.

    ``status`` is one of ``complete``, ``weight-exceeded`` (with a witness
    diagram and arrow), or ``cap-exceeded``.  Weights above 4 certify
    mutation-infiniteness for diagrams with at least 3 vertices.
    """

    seed: Diagram
    status: str
    representatives: dict[CanonicalKey, Diagram]
    edges: tuple[tuple[CanonicalKey, int, CanonicalKey], ...]
    witness: tuple[Diagram, tuple[int, int, int]] | None = None
    parents: dict[CanonicalKey, tuple[CanonicalKey, int]] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.representatives)

    def is_complete(self) -> bool:
        return self.status == "complete"

    def diagrams(self) -> list[Diagram]:
        return list(self.representatives.values())

    def path_from_seed(self, key: CanonicalKey) -> list[int]:
        """Mutation vertex sequence reaching the representative from the seed.

        The path applies to the stored representatives: following it from the
        seed representative reproduces the keyed representative up to
        isomorphism, and exactly when replayed with ``replay_path``.
        """
        path = []
        while key in self.parents:
            key, vertex = self.parents[key]
            path.append(vertex)
        return path[::-1]

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "size": self.size,
            "representatives": [d.to_json_dict() for d in self.diagrams()],
            "edges": [
                [a.hex_digest(), v, b.hex_digest()] for a, v, b in self.edges
            ],
        }


def enumerate_class(seed: Diagram, cap: int = DEFAULT_CLASS_CAP) -> MutationClass:
    """Breadth-first closure under mutation, deduplicating by canonical key.

    Abort conditions: an arrow of weight > 4 on a diagram with >= 3 vertices
    (mutation-infiniteness certificate), or more than ``cap`` representatives.
    """
    seed_key = canonical_key(seed)
    representatives = {seed_key: seed}
    parents: dict[CanonicalKey, tuple[CanonicalKey, int]] = {}
    edges: list[tuple[CanonicalKey, int, CanonicalKey]] = []
    if seed.n >= 3 and seed.max_weight() > 4:
        arrow = max(seed.arrows(), key=lambda a: a[2])
        return MutationClass(seed, "weight-exceeded", representatives, (), (seed, arrow))
    queue = [(seed, seed_key)]
    while queue:
        diagram, key = queue.pop(0)
        for k in diagram.vertices():
            image = mutate(diagram, k)
            image_key = canonical_key(image)
            edges.append((key, k, image_key))
            if image_key in representatives:
                continue
            if image.n >= 3 and image.max_weight() > 4:
                arrow = max(image.arrows(), key=lambda a: a[2])
                representatives[image_key] = image
                return MutationClass(
                    seed, "weight-exceeded", representatives, tuple(edges),
                    (image, arrow), parents,
                )
            representatives[image_key] = image
            parents[image_key] = (key, k)
            if len(representatives) > cap:
                return MutationClass(
                    seed, "cap-exceeded", representatives, tuple(edges), None, parents
                )
            queue.append((image, image_key))
    return MutationClass(seed, "complete", representatives, tuple(edges), None, parents)


@dataclass(frozen=True)
class FinitenessResult:
    finite: bool | None  # None = inconclusive (cap)
    mutation_class: MutationClass

    def __bool__(self) -> bool:
        return bool(self.finite)


def is_mutation_finite(seed: Diagram, cap: int = DEFAULT_CLASS_CAP) -> FinitenessResult:
    """Mutation-finiteness with certificate.

    For n >= 3 this is the weight criterion over the class; n <= 2 classes
    are a single diagram up to isomorphism, hence always finite.
    """
    if seed.n <= 2:
        key = canonical_key(seed)
        cls = MutationClass(seed, "complete", {key: seed}, ())
        return FinitenessResult(True, cls)
    cls = enumerate_class(seed, cap)
    if cls.status == "complete":
        return FinitenessResult(True, cls)
    if cls.status == "weight-exceeded":
        return FinitenessResult(False, cls)
    return FinitenessResult(None, cls)


class ClassificationInconclusive(RuntimeError):
    """Class enumeration hit the cap before the type could be decided."""


@dataclass(frozen=True)
class TypeTag:
    family: str  # "finite" | "affine" | "exceptional" | "other"
    name: str

    def __str__(self) -> str:
        if self.family == "other":
            return "other"
        return f"{self.family} {self.name}"


def classify(seed: Diagram, cap: int = DEFAULT_CLASS_CAP) -> TypeTag:
    """Identify the mutation class against the finite/affine/exceptional standards."""
    from . import standards

    n = seed.n
    if n == 1:
        return TypeTag("finite", "A1")
    if n == 2:
        w = seed.max_weight()
        small = {0: None, 1: "A2", 2: "B2", 3: "G2"}
        if w in (1, 2, 3):
            return TypeTag("finite", small[w])
        if w == 4:
            return TypeTag("affine", "A~(1,1)")
        return TypeTag("other", "rank-2")

    cls = enumerate_class(seed, cap)
    if cls.status == "cap-exceeded":
        raise ClassificationInconclusive(f"mutation class exceeds cap {cap}")
    if cls.status == "weight-exceeded":
        return TypeTag("other", "mutation-infinite")
    keys = set(cls.representatives)
    for family, name, standard in standards.standards_for_rank(n):
        if canonical_key(standard) in keys:
            return TypeTag(family, name)
    return TypeTag("other", "unrecognized")


def cycle_census(classes: Iterable[MutationClass]) -> set[tuple[int, ...]]:
    """Oriented chordless cycles with a non-simple arrow across class members.

    Cycles are reported up to isomorphism as dihedral-minimal weight
    sequences (see ChordlessCycle.weight_signature).
    """
    found: set[tuple[int, ...]] = set()
    for cls in classes:
        if not cls.is_complete():
            raise ValueError("cycle census requires complete classes")
        for diagram in cls.diagrams():
            for cycle in chordless_cycles(diagram):
                if cycle.oriented and any(w > 1 for w in cycle.weights):
                    found.add(cycle.weight_signature())
    return found


def replay_path(seed: Diagram, path: Iterable[int]) -> Diagram:
    d = seed
    for k in path:
        d = mutate(d, k)
    return d
