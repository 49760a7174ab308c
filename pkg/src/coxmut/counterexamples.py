"""The five quotient-pair counterexamples showing the pattern relations matter.

Each case drops the pattern relations (R4) from a diagram's presentation,
quotients both that group and the corresponding Coxeter group by matched
normal closures, and separates the two quotients by computable invariants:
coset-enumeration order, abelian invariants, and homomorphism counts into
small symmetric groups.  Infinite sides are only ever reported as
"exceeded cap", never as proven infinite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import abelian_invariants
from .coset import coset_enumerate
from .diagram import Diagram
from .homs import count_homs
from .patterns import pattern_b3, pattern_b_tilde, pattern_a22
from .presentation import (
    Presentation,
    coxeter_presentation,
    generate_presentation,
    omit_r4,
    quotient,
)
from .words import Word, substitute

CASES = ("A3", "Dn", "B3", "Bn", "G2")

DEFAULT_COUNTEREXAMPLE_CAP = 100_000


@dataclass(frozen=True)
class QuotientInvariants:
    status: str  # "complete" | "exceeded"
    order: int | None
    abelian: tuple[int, ...]
    hom_counts: dict[int, int]

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "order": self.order,
            "abelian": list(self.abelian),
            "hom_counts": {str(k): v for k, v in self.hom_counts.items()},
        }


@dataclass(frozen=True)
class CounterexampleReport:
    case: str
    n: int | None
    dropped_group: QuotientInvariants  # quotient of the R4-free group
    coxeter_group: QuotientInvariants  # quotient of the Coxeter group W
    separating: tuple[str, ...]

    @property
    def separated(self) -> bool:
        return bool(self.separating)

    def to_json_dict(self) -> dict:
        return {
            "case": self.case,
            "n": self.n,
            "dropped_quotient": self.dropped_group.to_json_dict(),
            "coxeter_quotient": self.coxeter_group.to_json_dict(),
            "separated_by": list(self.separating),
        }


def _coxeter_matrix(n: int, entries: dict[tuple[int, int], int]) -> list[list[int]]:
    m = [[2] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 1
    for (i, j), v in entries.items():
        m[i - 1][j - 1] = v
        m[j - 1][i - 1] = v
    return m


def _d_section_diagram(n: int) -> Diagram:
    """Big cycle 2..n (source 2, sink n) with tails 1 and n+1 on its chord."""
    arrows = [(i, i + 1, 1) for i in range(2, n)]
    arrows += [(2, n, 1), (n, 1, 1), (1, 2, 1), (n, n + 1, 1), (n + 1, 2, 1)]
    return Diagram.from_arrows(n + 1, arrows)


def _phi_long_word(n: int) -> Word:
    # s_{n+1} s_1 s_2 ... s_{n-2} s_n s_{n-2} ... s_1 s_{n+1}
    middle = tuple(range(1, n - 1))
    return (n + 1,) + middle + (n,) + tuple(reversed(middle)) + (n + 1,)


def _case_data(case: str, n: int | None):
    if case == "A3":
        diagram = pattern_a22().diagram
        h: Word = (2, 4)
        phi = {1: (1,), 2: (2,), 3: (4, 2, 3, 2, 4), 4: (4,)}
        w = _coxeter_matrix(4, {(1, 2): 3, (2, 3): 3, (3, 4): 3, (4, 1): 3})
        return diagram, h, phi, w
    if case == "B3":
        diagram = pattern_b3().diagram
        h = (2, 3, 2, 3)
        phi = {1: (2, 4, 1, 4, 2), 2: (2, ), 3: (4, 3, 4), 4: (3,)}
        # star-shaped B~3 Coxeter group; phi is a verified homomorphism into
        # exactly this W (checked in the exact reflection representation)
        w = _coxeter_matrix(4, {(1, 4): 3, (2, 4): 4, (3, 4): 3})
        return diagram, h, phi, w
    if case == "G2":
        diagram = Diagram.from_arrows(3, [(1, 2, 3), (2, 3, 4), (3, 1, 3)])
        h = (1, 3, 1, 3)
        phi = {1: (3, 1, 3), 2: (3, 1, 3, 2, 3, 1, 3), 3: (3,)}
        w = _coxeter_matrix(3, {(1, 3): 6, (2, 3): 3})
        return diagram, h, phi, w
    if case == "Dn":
        if n is None or n < 4:
            raise ValueError("case Dn needs n >= 4")
        diagram = _d_section_diagram(n)
        h = (1, n + 1)
        phi = {i: (i,) for i in range(1, n + 2)}
        phi[n] = _phi_long_word(n)
        entries = {(i, i + 1): 3 for i in range(1, n - 1)}
        entries[(2, n + 1)] = 3
        entries[(n - 2, n)] = 3
        w = _coxeter_matrix(n + 1, entries)
        return diagram, h, phi, w
    if case == "Bn":
        if n is None or n < 3:
            raise ValueError("case Bn needs n >= 3")
        diagram = pattern_b_tilde(n).diagram
        h = (1, n + 1, 1, n + 1)
        phi = {i: (i,) for i in range(1, n + 2)}
        phi[n] = _phi_long_word(n)
        entries = {(i, i + 1): 3 for i in range(1, n - 1)}
        entries[(n + 1, 1)] = 4
        entries[(n - 2, n)] = 3
        w = _coxeter_matrix(n + 1, entries)
        return diagram, h, phi, w
    raise ValueError(f"unknown counterexample case {case!r}; pick from {CASES}")


def _invariants(pres: Presentation, cap: int, degrees=(3, 4)) -> QuotientInvariants:
    table = coset_enumerate(pres, cap=cap)
    homs = {deg: count_homs(pres, deg) for deg in degrees}
    return QuotientInvariants(
        table.status,
        table.order,
        tuple(abelian_invariants(pres).factors),
        homs,
    )


def reproduce_counterexample(
    case: str,
    n: int | None = None,
    cap: int = DEFAULT_COUNTEREXAMPLE_CAP,
    degrees: tuple[int, ...] = (3, 4),
) -> CounterexampleReport:
    """Build both quotients for the case and separate them by invariants."""
    diagram, h, phi, w = _case_data(case, n)
    dropped = quotient(omit_r4(generate_presentation(diagram, "finite-affine")), [h])
    coxeter = quotient(coxeter_presentation(w), [substitute(h, phi)])
    q1 = _invariants(dropped, cap, degrees)
    q2 = _invariants(coxeter, cap, degrees)

    separating = []
    if q1.status != q2.status or (q1.order != q2.order):
        separating.append("order")
    if q1.abelian != q2.abelian:
        separating.append("abelian-invariants")
    for deg in sorted(q1.hom_counts):
        if q1.hom_counts[deg] != q2.hom_counts.get(deg):
            separating.append(f"hom-count-S{deg}")
    return CounterexampleReport(case, n, q1, q2, tuple(separating))
