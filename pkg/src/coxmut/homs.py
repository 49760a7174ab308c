"""Counting homomorphisms into small symmetric groups.

Since every generator is an involution (R1), generator images range over
involutions and the identity of S_n; the count of satisfying image tuples
is an isomorphism invariant of the presented group.  Enumeration is
backtracking with incremental relation checks; relator evaluation over many
candidate homomorphisms is vectorized through a multiplication table.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

import numpy as np

MAX_HOM_DEGREE = 5


@lru_cache(maxsize=None)
def symmetric_group(degree: int):
    """All permutations (as tuples), their multiplication table, and inverses."""
    perms = sorted(permutations(range(degree)))
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    table = np.zeros((size, size), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[q[k]] for k in range(degree))]
    return perms, index, table


@lru_cache(maxsize=None)
def involution_ids(degree: int) -> tuple[int, ...]:
    perms, index, table = symmetric_group(degree)
    identity = index[tuple(range(degree))]
    return tuple(
        i for i, p in enumerate(perms) if table[i, i] == identity
    )


def enumerate_homs(presentation, degree: int) -> np.ndarray:
    """All homomorphisms as an array of generator-image permutation ids.

    Images are restricted to involutions and the identity, which is sound
    because of the R1 relators.
    """
    if degree > MAX_HOM_DEGREE:
        raise ValueError(f"degree {degree} exceeds bound {MAX_HOM_DEGREE}")
    n = presentation.generators
    perms, index, table = symmetric_group(degree)
    identity = index[tuple(range(degree))]
    candidates = involution_ids(degree)

    # relations checkable once all their generators are assigned
    by_depth: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    for rel in presentation.relations:
        word = rel.word
        if not word:
            continue
        by_depth[max(word)].append(word)

    images = [0] * n
    found: list[tuple[int, ...]] = []

    def ok_at(depth: int) -> bool:
        for word in by_depth[depth]:
            acc = identity
            for letter in word:
                acc = table[acc, images[letter - 1]]
            if acc != identity:
                return False
        return True

    def descend(depth: int) -> None:
        if depth == n:
            found.append(tuple(images))
            return
        for candidate in candidates:
            images[depth] = candidate
            if ok_at(depth + 1):
                descend(depth + 1)

    descend(0)
    return np.array(found, dtype=np.int32).reshape(len(found), n)


def count_homs(presentation, degree: int) -> int:
    """Number of homomorphisms into S_degree with involutive images."""
    return len(enumerate_homs(presentation, degree))


def evaluate_words_over_homs(
    homs: np.ndarray, words: Sequence[Sequence[int]], degree: int
) -> np.ndarray:
    """For each word, whether it maps to the identity under every hom (row)."""
    perms, index, table = symmetric_group(degree)
    identity = index[tuple(range(degree))]
    out = np.zeros((len(words), len(homs)), dtype=bool)
    if len(homs) == 0:
        return np.ones((len(words), 0), dtype=bool)
    for wi, word in enumerate(words):
        acc = np.full(len(homs), identity, dtype=np.int32)
        for letter in word:
            acc = table[acc, homs[:, letter - 1]]
        out[wi] = acc == identity
    return out
