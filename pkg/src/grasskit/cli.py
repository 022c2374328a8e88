"""Command-line front end.

Subcommands:

  check      run the anticommutation, involution and canonical-type sweeps
  classify   produce a type report with kernels for a spec
  epsilon    print the +-1 sequence, optionally as CSV and a figure
  lemma13    verify the prefix-product rule of the sequence up to a limit
  identity   try to falsify a graded polynomial identity against a spec
  decompose  split elements into their fixed and negated components

Exit codes: 0 when every check passes, 1 on a mathematical counterexample,
2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import ElementParseError, parse_element
from .automorphisms import (
    SKIPPED,
    AnticommutationError,
    AutomorphismSpec,
    Verdict,
    VerificationError,
    certify,
    check_anticommute,
    check_involution,
    is_canonical_type,
)
from .constructions import (
    ConstructionError,
    EpsilonRule,
    check_epsilon_products,
    epsilon_values,
)
from .freealg import GradedPolyParseError, parse_graded_poly
from .gradings import classify, falsify_identity, falsify_identity_exhaustive
from .specfiles import SpecFileError, load_spec

DEFAULT_BOUND = 20
DEFAULT_BOUND_EPSILON_TAIL = 12


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _load_spec_arg(path: str) -> AutomorphismSpec:
    try:
        return load_spec(path)
    except (SpecFileError, ConstructionError, ElementParseError) as exc:
        raise _UsageError(str(exc)) from None
    except OSError as exc:
        raise _UsageError(f"cannot read spec file: {exc}") from None


class _UsageError(Exception):
    pass


def _default_bound(spec: AutomorphismSpec, given: int | None) -> int:
    if given is not None:
        return given
    if isinstance(spec.rule, EpsilonRule):
        return DEFAULT_BOUND_EPSILON_TAIL
    return DEFAULT_BOUND


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _statuses(spec: AutomorphismSpec, bound: int) -> list[tuple[int, str]]:
    from .algebra import Element

    out = []
    for i in range(1, bound + 1):
        img = spec.image(i)
        gen = Element.generator(i)
        if img == gen:
            out.append((i, "+1"))
        elif img == -gen:
            out.append((i, "-1"))
        else:
            out.append((i, "perturbed"))
    return out


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    spec = _load_spec_arg(args.spec)
    bound = _default_bound(spec, args.bound)
    verdicts: list[Verdict] = []
    anticommute = check_anticommute(spec, bound)
    verdicts.append(anticommute)
    if anticommute.holds:
        verdicts.append(check_involution(spec, bound))
    else:
        verdicts.append(
            Verdict("involution", bound, SKIPPED, info={"reason": "anticommutation failed"})
        )
    verdicts.append(is_canonical_type(spec, bound))
    ok = all(v.holds for v in verdicts)
    payload = {
        "command": "check",
        "spec": spec.describe(),
        "bound": bound,
        "checks": [v.to_json() for v in verdicts],
        "ok": ok,
    }
    _emit(payload, args.json, [v.describe() for v in verdicts])
    return 0 if ok else 1


def _cmd_classify(args) -> int:
    spec = _load_spec_arg(args.spec)
    bound = _default_bound(spec, args.bound)
    try:
        spec = certify(spec, bound)
    except VerificationError as exc:
        _emit(
            {"command": "classify", "error": exc.verdict.to_json()},
            args.json,
            [f"not an involutive automorphism: {exc.verdict.describe()}"],
        )
        return 1
    report = classify(spec, bound)
    statuses = _statuses(spec, bound)
    if args.csv:
        from .reports import write_classification_csv

        write_classification_csv(args.csv, statuses)
    if args.plot:
        from .reports import plot_classification

        plot_classification(args.plot, statuses)
    payload = {"command": "classify", "spec": spec.describe(), **report.to_json()}
    lines = [report.describe()]
    lines.append(
        "fixed lines: " + (", ".join(str(v) for v in report.kernel_plus) or "none")
    )
    lines.append(
        "negated lines: " + (", ".join(str(v) for v in report.kernel_minus) or "none")
    )
    _emit(payload, args.json, lines)
    return 0


def _cmd_epsilon(args) -> int:
    values = epsilon_values(args.n)
    if args.csv:
        from .reports import write_epsilon_csv

        write_epsilon_csv(args.csv, values)
    if args.plot:
        from .reports import plot_epsilon

        plot_epsilon(args.plot, values)
    payload = {"command": "epsilon", "n": args.n, "values": values}
    lines = [f"{i:>5}  {v:+d}" for i, v in enumerate(values, start=1)]
    _emit(payload, args.json, lines)
    return 0


def _cmd_lemma13(args) -> int:
    verdict = check_epsilon_products(args.nmax)
    payload = {"command": "lemma13", **verdict.to_json()}
    _emit(payload, args.json, [verdict.describe()])
    return 0 if verdict.holds else 1


def _cmd_identity(args) -> int:
    spec = _load_spec_arg(args.spec)
    bound = _default_bound(spec, args.bound)
    try:
        poly = parse_graded_poly(args.polynomial)
    except GradedPolyParseError as exc:
        raise _UsageError(f"bad polynomial: {exc}") from None
    try:
        spec = certify(spec, bound)
    except VerificationError as exc:
        _emit(
            {"command": "identity", "error": exc.verdict.to_json()},
            args.json,
            [f"not an involutive automorphism: {exc.verdict.describe()}"],
        )
        return 1
    if args.exhaustive:
        verdict = falsify_identity_exhaustive(poly, spec, bound)
    else:
        verdict = falsify_identity(poly, spec, bound, trials=args.trials, seed=args.seed)
    payload = {
        "command": "identity",
        "polynomial": str(poly),
        "spec": spec.describe(),
        **verdict.to_json(),
    }
    lines = [verdict.describe()]
    if verdict.counterexample:
        for name, value in verdict.counterexample["assignment"].items():
            lines.append(f"  {name} = {value}")
        lines.append(f"  value = {verdict.counterexample['value']}")
    _emit(payload, args.json, lines)
    return 0 if verdict.holds else 1


def _cmd_decompose(args) -> int:
    spec = _load_spec_arg(args.spec)
    try:
        elements = [parse_element(text) for text in args.elements]
    except ElementParseError as exc:
        raise _UsageError(f"bad element: {exc}") from None
    results = []
    try:
        for el in elements:
            a0, a1 = spec.project(el)
            results.append({"element": str(el), "degree0": str(a0), "degree1": str(a1)})
    except VerificationError as exc:
        _emit(
            {"command": "decompose", "error": exc.verdict.to_json()},
            args.json,
            [f"not an involutive automorphism: {exc.verdict.describe()}"],
        )
        return 1
    payload = {"command": "decompose", "spec": spec.describe(), "elements": results}
    lines = [
        f"{r['element']}  ->  degree0: {r['degree0']}   degree1: {r['degree1']}"
        for r in results
    ]
    _emit(payload, args.json, lines)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasskit",
        description="Exact workbench for order-2 automorphisms of the exterior algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_options(p, with_bound=True):
        p.add_argument("--spec", required=True, help="spec file path, or inline JSON")
        if with_bound:
            p.add_argument("--bound", type=_positive_int, default=None,
                           help="verification window (default 20, or 12 for the epsilon tail family)")
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("check", help="run the verification sweeps on a spec")
    add_spec_options(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("classify", help="type report with fixed/negated line kernels")
    add_spec_options(p)
    p.add_argument("--csv", metavar="PATH", help="write per-generator statuses as CSV")
    p.add_argument("--plot", metavar="PATH", help="write a per-generator status figure")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("epsilon", help="print the +-1 sequence")
    p.add_argument("--n", type=_positive_int, required=True, help="how many values")
    p.add_argument("--csv", metavar="PATH", help="write the table as CSV")
    p.add_argument("--plot", metavar="PATH", help="write a step chart of the sequence")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_epsilon)

    p = sub.add_parser("lemma13", help="verify the prefix-product rule of the sequence")
    p.add_argument("--nmax", type=_positive_int, default=10000, help="verify for n up to this")
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_lemma13)

    p = sub.add_parser("identity", help="falsify a graded polynomial identity")
    p.add_argument("polynomial", help="polynomial text, e.g. '[z1,z2]' or 'y1*y2 - y2*y1'")
    add_spec_options(p)
    p.add_argument("--trials", type=_positive_int, default=200, help="random trials (default 200)")
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument("--exhaustive", action="store_true",
                   help="enumerate projected-basis substitutions instead of sampling")
    p.set_defaults(func=_cmd_identity)

    p = sub.add_parser("decompose", help="split elements into fixed and negated parts")
    p.add_argument("elements", nargs="+", metavar="ELEMENT", help="element text, e.g. 'e2'")
    add_spec_options(p, with_bound=False)
    p.set_defaults(func=_cmd_decompose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AnticommutationError as exc:
        print(f"not an endomorphism: {exc.verdict.describe()}", file=sys.stderr)
        return 1
    except (ConstructionError, ElementParseError, GradedPolyParseError, SpecFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
