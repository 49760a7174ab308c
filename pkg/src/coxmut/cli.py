"""Command-line entry points.

Exit codes: 0 ok, 1 usage or invalid input, 2 verification failure,
3 cap exceeded.  COXMUT_CAP overrides the default enumeration caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .counterexamples import CASES, reproduce_counterexample
from .diagram import Diagram, InvalidDiagramError, mutate, validate
from .harness import verify_class, verify_invariance_step
from .mutclass import ClassificationInconclusive, classify, enumerate_class
from .presentation import (
    RulesetError,
    generate_presentation,
    reduce_cycle_relations,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_CAP = 3


def _default_cap(fallback: int) -> int:
    try:
        return int(os.environ["COXMUT_CAP"])
    except (KeyError, ValueError):
        return fallback


def _load_diagram(path: str) -> Diagram:
    with open(path, "r", encoding="utf-8") as fh:
        diagram = Diagram.from_json(fh.read())
    report = validate(diagram)
    if not report.ok:
        raise InvalidDiagramError(
            f"diagram violates the cycle condition on: {report.violations}"
        )
    return diagram


def cmd_mutate(args) -> int:
    diagram = _load_diagram(args.diagram)
    if not 1 <= args.vertex <= diagram.n:
        print(f"error: vertex out of range 1..{diagram.n}", file=sys.stderr)
        return EXIT_USAGE
    print(mutate(diagram, args.vertex).to_json())
    return EXIT_OK


def cmd_present(args) -> int:
    diagram = _load_diagram(args.diagram)
    pres = generate_presentation(diagram, args.ruleset)
    if args.reduced:
        pres = reduce_cycle_relations(pres, diagram)
    if args.format == "json":
        print(pres.to_json())
    else:
        print(pres.render())
    return EXIT_OK


def cmd_class(args) -> int:
    diagram = _load_diagram(args.diagram)
    cap = args.cap or _default_cap(100_000)
    cls = enumerate_class(diagram, cap)
    print(json.dumps(cls.to_json_dict(), sort_keys=True))
    if cls.status == "cap-exceeded":
        print(f"cap {cap} exceeded", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def cmd_classify(args) -> int:
    diagram = _load_diagram(args.diagram)
    cap = args.cap or _default_cap(100_000)
    try:
        tag = classify(diagram, cap)
    except ClassificationInconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(json.dumps({"family": tag.family, "name": tag.name}, sort_keys=True))
    print(str(tag), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    diagram = _load_diagram(args.diagram)
    cap = args.cap or _default_cap(100_000)
    if args.edge is not None:
        report = verify_invariance_step(
            diagram, args.edge, args.ruleset, args.backend, args.degree, cap
        )
        print(json.dumps(report.to_json_dict(), sort_keys=True))
        ok = report.ok
    else:
        report = verify_class(diagram, args.ruleset, args.backend, args.degree, cap)
        print(json.dumps(report.to_json_dict(), sort_keys=True))
        print(
            f"{report.edges_checked} edges checked, "
            f"{len(report.failures())} failing ({report.backend} backend)",
            file=sys.stderr,
        )
        ok = report.ok
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_counterexample(args) -> int:
    cap = args.cap or _default_cap(100_000)
    report = reproduce_counterexample(args.case, args.n, cap)
    print(json.dumps(report.to_json_dict(), sort_keys=True))
    if not report.separated:
        print("quotients NOT separated by computed invariants", file=sys.stderr)
        return EXIT_VERIFICATION
    print(f"separated by: {', '.join(report.separating)}", file=sys.stderr)
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import serve

    serve(args.port, args.journal)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxmut",
        description="Diagram mutation, presentations, and invariance checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mutate", help="mutate a diagram at a vertex")
    p.add_argument("diagram")
    p.add_argument("vertex", type=int)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("present", help="print the generated presentation")
    p.add_argument("diagram")
    p.add_argument("--ruleset", default="finite-affine",
                   choices=["finite-affine", "unpunctured-surface", "exceptional", "auto"])
    p.add_argument("--reduced", action="store_true",
                   help="keep one cycle relation per cycle where justified")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("class", help="enumerate the mutation class")
    p.add_argument("diagram")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("classify", help="identify the mutation type")
    p.add_argument("diagram")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check presentation invariance under mutation")
    p.add_argument("diagram")
    p.add_argument("--edge", type=int, default=None,
                   help="verify the single mutation at this vertex")
    p.add_argument("--class", dest="whole_class", action="store_true",
                   help="verify every edge of the mutation class (the default)")
    p.add_argument("--ruleset", default="finite-affine",
                   choices=["finite-affine", "unpunctured-surface", "exceptional"])
    p.add_argument("--backend", default="exact", choices=["exact", "finite-quotient"])
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="reproduce a quotient-separation case")
    p.add_argument("--case", required=True, choices=list(CASES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("serve", help="run the local HTTP session service")
    p.add_argument("--port", type=int, default=8757)
    p.add_argument("--journal", default=None)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidDiagramError, RulesetError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
