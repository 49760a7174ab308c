"""Mutation-exploration sessions: current diagram, history, undo, journal."""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field

from .cycles import chordless_cycles
from .diagram import Diagram, InvalidDiagramError, mutate
from .patterns import match_patterns
from .presentation import (
    cycle_relation_params,
    families_for_ruleset,
    generate_presentation,
)


@dataclass
class Session:
    """One exploration line: replaying the history from the seed reproduces
    the current diagram; undo pops exactly one step."""

    seed: Diagram
    ruleset: str = "finite-affine"
    session_id: str = field(default_factory=lambda: uuid.uuid4().hex[:12])
    journal_path: str | None = None

    def __post_init__(self) -> None:
        self.current = self.seed
        self.history: list[tuple[Diagram, int]] = []
        self.lock = threading.Lock()
        self._journal("create", diagram=self.seed.to_json_dict(), ruleset=self.ruleset)

    def _journal(self, event: str, **payload) -> None:
        if not self.journal_path:
            return
        record = {"session": self.session_id, "event": event, **payload}
        with open(self.journal_path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record, sort_keys=True) + "\n")

    def mutate_at(self, vertex: int) -> None:
        with self.lock:
            if not 1 <= vertex <= self.current.n:
                raise InvalidDiagramError(
                    f"vertex {vertex} out of range 1..{self.current.n}"
                )
            previous = self.current
            self.current = mutate(self.current, vertex)
            self.history.append((previous, vertex))
            self._journal("mutate", vertex=vertex)

    def undo(self) -> None:
        with self.lock:
            if not self.history:
                return
            self.current, _ = self.history.pop()
            self._journal("undo")

    def state(self) -> dict:
        with self.lock:
            diagram = self.current
            history = [vertex for _, vertex in self.history]
        presentation = generate_presentation(diagram, self.ruleset)
        cycles = []
        for cycle in sorted(chordless_cycles(diagram), key=lambda c: c.vertices):
            entry: dict = {
                "vertices": list(cycle.vertices),
                "oriented": cycle.oriented,
                "t": None,
                "m": None,
            }
            if cycle.oriented:
                params = cycle_relation_params(cycle)
                entry["t"] = [t for _, t, _ in params]
                entry["m"] = [m for _, _, m in params]
            cycles.append(entry)
        matches = [
            m.to_json_dict()
            for m in match_patterns(diagram, families_for_ruleset(self.ruleset))
        ]
        return {
            "diagram": diagram.to_json_dict(),
            "presentation": presentation.to_json_dict(),
            "presentation_text": [
                {"kind": rel.kind, "text": f"{rel.render()} = e"}
                for rel in presentation.relations
            ],
            "cycles": cycles,
            "matches": matches,
            "history": history,
        }
