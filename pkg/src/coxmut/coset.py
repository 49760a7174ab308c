"""Todd-Coxeter coset enumeration for involution-generated presentations.

HLT strategy: scan relators coset by coset in creation order, filling gaps
with new cosets, with eager coincidence processing and a deduction-only
lookahead pass before giving up at the cap.  Generators are involutions, so
each generator is one symmetric table column (tau(a,g)=b iff tau(b,g)=a) and
the squares s_i^2 need no scanning.

``exceeded`` is a result, not a failure: it means the index was not shown
finite within the cap, never that the group is infinite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

DEFAULT_COSET_CAP = 1_000_000

UNDEF = -1


@dataclass
class CosetTable:
    ngens: int
    status: str  # "complete" | "exceeded"
    order: int | None  # live cosets when complete; None when exceeded
    cap: int
    table: list[list[int]] | None = None

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    @property
    def index(self) -> int | None:
        return self.order


class _Enumerator:
    def __init__(self, ngens: int, relators: list[tuple[int, ...]], cap: int):
        self.ngens = ngens
        self.relators = relators
        self.cap = cap
        self.table: list[list[int]] = [[UNDEF] * ngens]
        self.rep: list[int] = [0]
        self.live = 1
        self.queue: list[tuple[int, int]] = []

    def find(self, c: int) -> int:
        while self.rep[c] != c:
            self.rep[c] = self.rep[self.rep[c]]
            c = self.rep[c]
        return c

    def define(self, a: int, g: int) -> int:
        if self.live >= self.cap:
            raise _CapExceeded
        b = len(self.table)
        self.table.append([UNDEF] * self.ngens)
        self.rep.append(b)
        self.live += 1
        self.table[a][g] = b
        self.table[b][g] = a
        return b

    def set_edge(self, a: int, g: int, b: int) -> None:
        for x, y in ((a, b), (b, a)):
            cur = self.table[x][g]
            if cur == UNDEF:
                self.table[x][g] = y
            elif self.find(cur) != self.find(y):
                self.queue.append((cur, y))

    def drain(self) -> None:
        while self.queue:
            x, y = self.queue.pop()
            x, y = self.find(x), self.find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            self.rep[y] = x
            self.live -= 1
            row = self.table[y]
            for g in range(self.ngens):
                z = row[g]
                if z != UNDEF:
                    self.set_edge(self.find(x), g, self.find(z))

    def merge(self, a: int, b: int) -> None:
        self.queue.append((a, b))
        self.drain()

    def scan(self, start: int, word: tuple[int, ...], fill: bool) -> None:
        # forward
        f = start
        i = 0
        m = len(word)
        while i < m:
            nxt = self.table[f][word[i]]
            if nxt == UNDEF:
                break
            f = self.find(nxt)
            i += 1
        if i == m:
            if f != start:
                self.merge(f, start)
            return
        # backward (generators are involutions, so reverse letters as-is)
        b = start
        j = m
        while j > i + 1:
            nxt = self.table[b][word[j - 1]]
            if nxt == UNDEF:
                break
            b = self.find(nxt)
            j -= 1
        if j == i + 1:
            self.set_edge(f, word[i], b)
            self.drain()
            return
        if not fill:
            return
        while j > i + 1:
            f = self.define(f, word[i])
            i += 1
        self.set_edge(f, word[i], b)
        self.drain()

    def lookahead(self) -> None:
        c = 0
        while c < len(self.table):
            if self.find(c) == c:
                for rel in self.relators:
                    self.scan(c, rel, fill=False)
                    if self.find(c) != c:
                        break
            c += 1

    def closed(self) -> bool:
        for c in range(len(self.table)):
            if self.find(c) != c:
                continue
            if any(x == UNDEF for x in self.table[c]):
                return False
        return True

    def run(self, subgroup: list[tuple[int, ...]]) -> tuple[str, int | None]:
        try:
            for word in subgroup:
                self.scan(0, word, fill=True)
            cursor = 0
            while cursor < len(self.table):
                if self.find(cursor) != cursor:
                    cursor += 1
                    continue
                for rel in self.relators:
                    self.scan(self.find(cursor), rel, fill=True)
                    if self.find(cursor) != cursor:
                        break
                else:
                    # close the row: every generator image must exist
                    row = self.table[cursor]
                    for g in range(self.ngens):
                        if row[g] == UNDEF:
                            self.define(cursor, g)
                cursor += 1
        except _CapExceeded:
            self.lookahead()
            if self.live > self.cap or not self.closed():
                return "exceeded", None
        return "complete", self.live


class _CapExceeded(Exception):
    pass


def coset_enumerate_raw(
    ngens: int,
    relators: Iterable[Sequence[int]],
    subgroup: Iterable[Sequence[int]] = (),
    cap: int = DEFAULT_COSET_CAP,
) -> CosetTable:
    rels = []
    for rel in relators:
        word = tuple(int(x) - 1 for x in rel)
        if any(not 0 <= g < ngens for g in word):
            raise ValueError(f"relator letter outside 1..{ngens}: {rel}")
        if len(word) == 2 and word[0] == word[1]:
            continue  # involution squares are structural
        if word:
            rels.append(word)
    subs = [tuple(int(x) - 1 for x in w) for w in subgroup]
    enum = _Enumerator(ngens, rels, cap)
    status, order = enum.run(subs)
    return CosetTable(ngens, status, order, cap)


def coset_enumerate(presentation, subgroup=(), cap: int = DEFAULT_COSET_CAP) -> CosetTable:
    """Enumerate cosets of the subgroup generated by ``subgroup`` words.

    With no subgroup generators the index is the group order.
    """
    relators = [rel.word for rel in presentation.relations]
    return coset_enumerate_raw(presentation.generators, relators, subgroup, cap)
