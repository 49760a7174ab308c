import random

from coxmut import Diagram, are_isomorphic, canonical_key, opposite, permute
from coxmut.mutclass import enumerate_class
from coxmut.standards import exceptional_x7
from conftest import oriented_cycle, weighted_path


def _random_permutation(n, rng):
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    return {i + 1: labels[i] for i in range(n)}


def test_permutation_invariance_on_affine_f4_class():
    rng = random.Random(7)
    cls = enumerate_class(weighted_path([1, 1, 2, 1]))
    reps = cls.diagrams()
    for _ in range(100):
        d = rng.choice(reps)
        perm = _random_permutation(d.n, rng)
        assert canonical_key(permute(d, perm)) == canonical_key(d)


def test_orientation_distinguished():
    oriented = oriented_cycle([1, 1, 1])
    non_oriented = Diagram.from_arrows(3, [(1, 2, 1), (1, 3, 1), (2, 3, 1)])
    assert canonical_key(oriented) != canonical_key(non_oriented)


def test_x7_members_have_distinct_keys():
    cls = enumerate_class(exceptional_x7())
    assert cls.size == 2
    keys = list(cls.representatives)
    assert keys[0] != keys[1]


def test_are_isomorphic_via_relabeling():
    d = weighted_path([2, 1, 3])
    assert are_isomorphic(d, permute(d, {1: 4, 2: 3, 3: 2, 4: 1}))
    assert not are_isomorphic(d, weighted_path([3, 1, 2]))


def test_same_color_cycle_canonicalization():
    # all vertices of an oriented simply-laced cycle share every local
    # invariant; the key search must still terminate and stay invariant
    c6 = oriented_cycle([1] * 6)
    assert canonical_key(c6) == canonical_key(permute(c6, {1: 3, 2: 4, 3: 5, 4: 6, 5: 1, 6: 2}))


def test_opposite_not_always_isomorphic():
    d = weighted_path([1, 3])  # through-path weights (1,3)
    assert not are_isomorphic(d, opposite(d))
