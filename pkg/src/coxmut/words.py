"""Words over involutive generators.

Every generator squares to the identity, so a word's inverse is its reversal
and free reduction just cancels adjacent equal letters.  Relators are
compared up to cyclic rotation and inversion, which is the normalization
used to deduplicate relations produced by symmetric pattern matches.
"""

from __future__ import annotations

from typing import Mapping, Sequence

Word = tuple[int, ...]


def free_reduce(word: Sequence[int]) -> Word:
    """Cancel adjacent equal letters until none remain."""
    out: list[int] = []
    for letter in word:
        if out and out[-1] == letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def substitute(word: Sequence[int], replacement: Mapping[int, Sequence[int]]) -> Word:
    """Replace each letter by its image word, freely reduced."""
    out: list[int] = []
    for letter in word:
        image = replacement.get(letter, (letter,))
        for x in image:
            if out and out[-1] == x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == w[-1]:
        w = w[1:-1]
        w = list(free_reduce(w))
    return tuple(w)


def normalize_relator(word: Sequence[int]) -> Word:
    """Least representative under cyclic rotation and inversion."""
    w = cyclic_reduce(word)
    if not w:
        return w
    best = None
    for seq in (w, inverse(w)):
        for r in range(len(seq)):
            candidate = seq[r:] + seq[:r]
            if best is None or candidate < best:
                best = candidate
    return best


def power(word: Sequence[int], exponent: int) -> Word:
    return tuple(word) * exponent
