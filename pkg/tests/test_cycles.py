from hypothesis import given, settings, strategies as st

from coxmut import Diagram, chordless_cycles, mutate
from coxmut.cycles import chordless_cycles_bruteforce
from conftest import oriented_cycle


def _cycle_set(cycles):
    return {(frozenset(c.vertices), c.oriented, c.weight_signature()) for c in cycles}


def test_triangle():
    cycles = chordless_cycles(oriented_cycle([1, 1, 1]))
    assert len(cycles) == 1 and cycles[0].oriented


def test_chord_disqualifies_square():
    d = Diagram.from_arrows(
        4, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 1, 1), (1, 3, 4)]
    )
    cycles = chordless_cycles(d)
    assert sorted(len(c) for c in cycles) == [3, 3]


def test_weighted_square():
    cycles = chordless_cycles(oriented_cycle([2, 2, 2, 2]))
    assert len(cycles) == 1
    assert cycles[0].oriented and cycles[0].weights == (2, 2, 2, 2)


def test_non_oriented_flag():
    d = Diagram.from_arrows(3, [(1, 2, 1), (1, 3, 1), (2, 3, 1)])
    (cycle,) = chordless_cycles(d)
    assert not cycle.oriented


@st.composite
def _mutated_diagrams(draw):
    seeds = [
        oriented_cycle([1, 1, 2, 1, 2]),
        oriented_cycle([1, 1, 2, 1, 1, 2]),
        Diagram.from_arrows(5, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (3, 5, 1)]),
        Diagram.from_arrows(
            6, [(1, 2, 1), (2, 3, 4), (3, 1, 1), (1, 4, 1), (4, 5, 4), (5, 1, 1), (1, 6, 1)]
        ),
    ]
    d = draw(st.sampled_from(seeds))
    for _ in range(draw(st.integers(0, 5))):
        d = mutate(d, draw(st.integers(1, d.n)))
    return d


@given(_mutated_diagrams())
@settings(max_examples=80, deadline=None)
def test_against_bruteforce_oracle(diagram):
    fast = _cycle_set(chordless_cycles(diagram))
    slow = _cycle_set(chordless_cycles_bruteforce(diagram))
    assert fast == slow


def test_oriented_cycle_vertex_order_follows_arrows():
    d = Diagram.from_arrows(3, [(2, 1, 1), (1, 3, 1), (3, 2, 1)])  # 1->3->2->1
    (cycle,) = chordless_cycles(d)
    assert cycle.vertices == (1, 3, 2)
    assert cycle.weights == (1, 1, 1)
