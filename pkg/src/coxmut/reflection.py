"""Exact reflection representations of Coxeter groups.

Two backends realize the same geometric representation:

* ``ReflectionRep`` carries the Tits form over Q(sqrt2, sqrt3), with
  B(e_i, e_j) = -cos(pi/m_ij) and sigma_i(e_j) = e_j - 2 B(e_i, e_j) e_i.
  This is the contract-level object.
* ``IntegerReflectionRep`` is the same representation rescaled to a
  Cartan-companion basis with integer matrices; with crystallographic
  exponents (m in {2, 3, 4, 6}) the rescaling is by sqrt(d_i), so relation
  checks over it are exact and fast.  It is the engine the invariance
  harness uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .quadfield import QuadraticFieldElement as QFE

ALLOWED_EXPONENTS = (2, 3, 4, 6)

QMatrix = tuple[tuple[QFE, ...], ...]


def qfe_identity(n: int) -> QMatrix:
    one, zero = QFE.one(), QFE.zero()
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def qfe_matmul(x: QMatrix, y: QMatrix) -> QMatrix:
    n = len(x)
    return tuple(
        tuple(
            sum((x[i][k] * y[k][j] for k in range(n)), QFE.zero())
            for j in range(n)
        )
        for i in range(n)
    )


@dataclass(frozen=True)
class ReflectionRep:
    rank: int
    form: QMatrix
    generators: tuple[QMatrix, ...]

    def generator(self, i: int) -> QMatrix:
        return self.generators[i - 1]


def build_reflection_rep(coxeter_matrix: Sequence[Sequence[int]]) -> ReflectionRep:
    """Standard geometric representation from a Coxeter matrix.

    Off-diagonal entries must lie in {2, 3, 4, 6}; diagonal entries are
    ignored.  Generator i acts by e_j -> e_j - 2 B(e_i, e_j) e_i.
    """
    n = len(coxeter_matrix)
    for i in range(n):
        for j in range(n):
            if i != j and coxeter_matrix[i][j] not in ALLOWED_EXPONENTS:
                raise ValueError(
                    f"Coxeter exponent m[{i + 1}][{j + 1}]={coxeter_matrix[i][j]} "
                    "outside {2,3,4,6}; Q(sqrt2,sqrt3) does not suffice"
                )
            if i != j and coxeter_matrix[i][j] != coxeter_matrix[j][i]:
                raise ValueError("Coxeter matrix must be symmetric")
    form = tuple(
        tuple(
            QFE.one() if i == j else -QFE.cos_pi_over(coxeter_matrix[i][j])
            for j in range(n)
        )
        for i in range(n)
    )
    generators = []
    for i in range(n):
        rows = []
        for r in range(n):
            if r != i:
                rows.append(
                    tuple(QFE.one() if r == j else QFE.zero() for j in range(n))
                )
            else:
                rows.append(
                    tuple(
                        (QFE.one() if i == j else QFE.zero()) - form[i][j].scale(2)
                        for j in range(n)
                    )
                )
        generators.append(tuple(rows))
    return ReflectionRep(n, form, tuple(generators))


def evaluate_word(rep: ReflectionRep, word: Sequence[int]) -> QMatrix:
    """Product of generator matrices; the empty word is the identity."""
    out = qfe_identity(rep.rank)
    for letter in word:
        if not 1 <= letter <= rep.rank:
            raise ValueError(f"generator {letter} outside rank {rep.rank}")
        out = qfe_matmul(out, rep.generator(letter))
    return out


def is_identity(matrix: QMatrix) -> bool:
    n = len(matrix)
    one, zero = QFE.one(), QFE.zero()
    return all(
        matrix[i][j] == (one if i == j else zero) for i in range(n) for j in range(n)
    )


def matrix_order(rep: ReflectionRep, word: Sequence[int], cap: int) -> int | None:
    """Least k <= cap with word^k = identity, or None."""
    base = evaluate_word(rep, word)
    acc = base
    for k in range(1, cap + 1):
        if is_identity(acc):
            return k
        acc = qfe_matmul(acc, base)
    return None


class IntegerReflectionRep:
    """Cartan-companion integer form of the geometric representation.

    Built from an acyclic weight-4-free diagram: its exchange-matrix lift B
    gives the generalized Cartan matrix A = 2I - |B|, whose off-diagonal
    products a_ij * a_ji = w_ij recover 4cos^2(pi/m_ij).  Matrices are exact
    integers (numpy object arrays), making long relator products cheap.
    """

    def __init__(self, cartan: Sequence[Sequence[int]]):
        self.rank = len(cartan)
        self.cartan = [list(map(int, row)) for row in cartan]
        n = self.rank
        gens = []
        for i in range(n):
            m = np.eye(n, dtype=object)
            for j in range(n):
                m[i, j] = (1 if i == j else 0) - self.cartan[i][j]
            gens.append(m)
        self._gens = gens
        self._identity = np.eye(n, dtype=object)

    @classmethod
    def from_diagram(cls, diagram) -> "IntegerReflectionRep":
        from .exchange import lift_to_matrix

        if diagram.max_weight() > 3:
            raise ValueError("integer reflection rep needs weights <= 3")
        b = lift_to_matrix(diagram).b
        n = diagram.n
        cartan = [
            [2 if i == j else -abs(b[i][j]) for j in range(n)] for i in range(n)
        ]
        return cls(cartan)

    def generator(self, i: int) -> np.ndarray:
        return self._gens[i - 1]

    def word_matrix(self, word: Sequence[int]) -> np.ndarray:
        out = self._identity
        for letter in word:
            out = out @ self._gens[letter - 1]
        return out

    def is_identity_word(self, word: Sequence[int]) -> bool:
        return bool(np.array_equal(self.word_matrix(word), self._identity))

    def is_identity_matrix(self, matrix: np.ndarray) -> bool:
        return bool(np.array_equal(matrix, self._identity))
