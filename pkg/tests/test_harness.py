import pytest

from coxmut import (
    Diagram,
    mutate,
    reproduce_counterexample,
    track_substitution,
    verify_class,
    verify_invariance_step,
)
from coxmut.harness import ClassVerifier, substitution_step
from conftest import weighted_path


def test_substitution_step_source_is_identity():
    # x = 1 is a source: no arrow enters it, so nothing is conjugated
    d = Diagram.from_arrows(3, [(1, 2, 1), (1, 3, 1)])
    step = substitution_step(d, 1)
    assert all(w == (i,) for i, w in step.replacements.items())


def test_track_substitution_example(g2_triangle):
    expr = track_substitution(g2_triangle, [2])
    assert expr == {1: (1,), 2: (2,), 3: (2, 3, 2)}


def test_track_substitution_involutive(g2_triangle):
    expr = track_substitution(g2_triangle, [2, 2])
    assert expr == {1: (1,), 2: (2,), 3: (3,)}


def test_verify_step_a3_exact(a3_path):
    report = verify_invariance_step(a3_path, 2, "finite-affine", "exact")
    assert report.backend == "exact" and report.ok


def test_verify_example_six_ten_edge(g2_triangle):
    report = verify_invariance_step(g2_triangle, 2, "finite-affine", "exact")
    assert report.ok
    # the edge checks the mutated cycle relations, including (t3 t1 t2 t1)^2
    words = {o.word for o in report.outcomes}
    assert (3, 1, 2, 1) * 2 in words


def test_verify_class_g2_exact(g2_triangle):
    report = verify_class(g2_triangle, "finite-affine", "exact")
    assert report.ok and report.backend == "exact"
    assert report.edges_checked == 6 * 3


def test_verify_class_c2_no_r4(weights=(2, 2)):
    seed = weighted_path(list(weights))
    report = verify_class(seed, "finite-affine", "exact")
    assert report.ok
    verifier = ClassVerifier(seed, "finite-affine", "exact")
    from coxmut.presentation import generate_presentation

    for d in verifier.mutation_class.diagrams():
        assert generate_presentation(d, "finite-affine").by_kind("R4") == []


def test_exceptional_falls_back_to_finite_quotient():
    from coxmut.standards import exceptional_x7

    report = verify_class(exceptional_x7(), "exceptional", "exact", degree=3)
    assert report.backend == "finite-quotient"
    assert report.ok


def test_corrupted_relation_detected(g2_triangle):
    # sanity: the finite-quotient backend can actually fail
    from coxmut.presentation import generate_presentation, quotient
    from coxmut.harness import substitution_step
    from coxmut.homs import enumerate_homs, evaluate_words_over_homs
    from coxmut.words import substitute

    src = generate_presentation(g2_triangle, "finite-affine")
    homs = enumerate_homs(src, 4)
    step = substitution_step(g2_triangle, 2)
    bogus = substitute((1, 3) * 2, step.replacements)  # (t1 t3)^2 is NOT a relation
    ok = evaluate_words_over_homs(homs, [bogus], 4)
    assert not ok.all()


@pytest.mark.parametrize(
    "case,n,finite_order",
    [("A3", None, 24), ("G2", None, 12), ("Dn", 4, 192)],
)
def test_counterexamples_quick(case, n, finite_order):
    report = reproduce_counterexample(case, n, cap=20_000)
    assert report.coxeter_group.status == "complete"
    assert report.coxeter_group.order == finite_order
    assert report.dropped_group.status == "exceeded"
    assert "order" in report.separating


def test_counterexample_b3_orders():
    report = reproduce_counterexample("B3", cap=20_000)
    assert report.dropped_group.order == 384
    assert report.coxeter_group.order == 48
    assert report.separated


def test_handle_class_invariance_finite_quotient():
    from coxmut.patterns import pattern_handle

    report = verify_class(
        pattern_handle().diagram, "unpunctured-surface", "finite-quotient", degree=4
    )
    assert report.ok and report.edges_checked == 6 * 5
