"""Diagram mutation, Coxeter-style presentations, and invariance checking."""

from .abelian import AbelianInvariants, abelian_invariants
from .canonical import CanonicalKey, are_isomorphic, canonical_key
from .coset import CosetTable, coset_enumerate, coset_enumerate_raw
from .counterexamples import CounterexampleReport, reproduce_counterexample
from .cycles import ChordlessCycle, chordless_cycles
from .diagram import (
    Diagram,
    InvalidDiagramError,
    ValidationReport,
    induced_subdiagram,
    mutate,
    mutate_path,
    opposite,
    permute,
    validate,
)
from .exchange import (
    ExchangeMatrix,
    UnliftableDiagramError,
    diagram_of,
    lift_to_matrix,
    mutate_matrix,
)
from .harness import (
    ClassReport,
    SubstitutionStep,
    VerificationReport,
    track_substitution,
    verify_class,
    verify_invariance_step,
)
from .homs import count_homs, enumerate_homs
from .mutclass import (
    ClassificationInconclusive,
    MutationClass,
    TypeTag,
    classify,
    cycle_census,
    enumerate_class,
    is_mutation_finite,
)
from .patterns import PatternMatch, match_patterns
from .presentation import (
    Presentation,
    Relation,
    coxeter_exponent,
    coxeter_presentation,
    cycle_relation_params,
    generate_presentation,
    omit_r4,
    quotient,
    reduce_cycle_relations,
)
from .quadfield import QuadraticFieldElement
from .radical import RadicalScalar, RadicandMismatchError
from .reflection import (
    IntegerReflectionRep,
    ReflectionRep,
    build_reflection_rep,
    evaluate_word,
)
from .session import Session
from .words import free_reduce, normalize_relator, substitute

__all__ = [name for name in dir() if not name.startswith("_")]
