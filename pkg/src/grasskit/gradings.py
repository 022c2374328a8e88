"""Analysis of the gradings induced by involutive automorphisms.

An involution phi splits the algebra into a fixed part and a negated part;
this module asks what that split looks like.  `fixed_line_kernel` finds every
combination of the first few generators that phi fixes or negates, by exact
linear algebra over the rationals.  `classify` sorts a spec into one of four
shapes: signed lines everywhere, signed lines on a cofinite set, finitely
many signed lines, or no preserved line at all.  The last two are reported as
candidates when they rest on a bounded window rather than on the rule's shape.

`eval_graded_poly` and the falsifiers connect free graded polynomials to a
concrete grading: values are substituted for variables after checking they
are homogeneous of the right degree with respect to phi.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import Element, monomial_key
from .automorphisms import (
    COUNTEREXAMPLE,
    NOT_FALSIFIED,
    AutomorphismSpec,
    Verdict,
    require_involutive,
)
from .freealg import GradedPolynomial, GradedVariable

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DegreeMismatch(ValueError):
    """A substituted value is not homogeneous of the variable's degree."""

    def __init__(self, variable: GradedVariable, value: Element, offending: Element):
        super().__init__(
            f"value for {variable} is not homogeneous of degree {variable.degree}: "
            f"{value} has a degree-{1 - variable.degree} component {offending}"
        )
        self.variable = variable
        self.value = value
        self.offending = offending


# ---------------------------------------------------------------------------
# exact linear algebra over Q


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the nullspace of the given matrix, by Gauss-Jordan
    elimination with exact rational arithmetic.

    Basis vectors correspond to the free columns in ascending order, each
    with a 1 in its free position.
    """
    matrix = [row[:] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(matrix)):
            if matrix[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        matrix[r], matrix[pivot_row] = matrix[pivot_row], matrix[r]
        inv = 1 / matrix[r][c]
        matrix[r] = [v * inv for v in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c]:
                factor = matrix[i][c]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[r])]
        pivot_cols.append(c)
        r += 1
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        vec = [_ZERO] * ncols
        vec[f] = _ONE
        for row_idx, pc in enumerate(pivot_cols):
            vec[pc] = -matrix[row_idx][f]
        basis.append(vec)
    return basis


def fixed_line_kernel(spec: AutomorphismSpec, bound: int, sign: int) -> list[Element]:
    """All v in span(e_1..e_bound) with phi(v) = sign * v, as a basis.

    The condition is linear in the coefficients of v: one equation per
    monomial occurring in the shifted images phi(e_i) - sign * e_i.  Solved
    exactly; an empty list means only the zero vector qualifies.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    shifted = []
    for i in range(1, bound + 1):
        shifted.append(spec.image(i) - Element.monomial((i,), sign))
    needed = max([bound] + [s.support_bound() for s in shifted])
    require_involutive(spec, needed)
    monomials = sorted({m for s in shifted for m, _ in s.terms()}, key=monomial_key)
    row_of = {m: r for r, m in enumerate(monomials)}
    rows = [[_ZERO] * bound for _ in monomials]
    for col, s in enumerate(shifted):
        for mono, coeff in s.terms():
            rows[row_of[mono]][col] = coeff
    basis = _nullspace(rows, bound)
    out = []
    for vec in basis:
        out.append(Element((((i + 1,), c) for i, c in enumerate(vec) if c)))
    return out


# ---------------------------------------------------------------------------
# the four shapes


@dataclass(frozen=True)
class TypeReport:
    """Where a spec falls among the four shapes, with the evidence used.

    ``i_beta`` lists the generators up to the bound whose lines are preserved
    (image is +-e_i).  ``candidate`` is True when the verdict rests on the
    bounded window alone and not on the rule's closed form.
    """

    bound: int
    type_number: int
    candidate: bool
    i_beta: tuple[int, ...]
    kernel_plus: tuple[Element, ...]
    kernel_minus: tuple[Element, ...]
    note: str

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "type": self.type_number,
            "candidate": self.candidate,
            "iBeta": list(self.i_beta),
            "kernelPlus": [str(v) for v in self.kernel_plus],
            "kernelMinus": [str(v) for v in self.kernel_minus],
            "note": self.note,
        }

    def describe(self) -> str:
        tag = " (candidate)" if self.candidate else ""
        shown = ", ".join(str(i) for i in self.i_beta) or "none"
        return (
            f"type {self.type_number}{tag} at bound {self.bound}; "
            f"signed generator lines: {shown}; {self.note}"
        )


def classify(spec: AutomorphismSpec, bound: int) -> TypeReport:
    """Sort the spec into one of the four shapes at the given bound.

    Rules that are eventually plain sign patterns decide type 1 against
    type 2 exactly, from their finite exception set.  Closed-form families
    are judged on the window: preserved generator lines inside it give a
    type 3 candidate; none at all, with both kernels empty, gives a type 4
    candidate.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    require_involutive(spec, bound)
    observed = []
    for i in range(1, bound + 1):
        img = spec.image(i)
        gen = Element.generator(i)
        if img == gen or img == -gen:
            observed.append(i)
    observed = tuple(observed)
    kplus = tuple(fixed_line_kernel(spec, bound, 1))
    kminus = tuple(fixed_line_kernel(spec, bound, -1))

    exceptions = spec.rule.signed_exceptions()
    if spec.rule.eventually_signed() and exceptions is not None:
        if exceptions:
            note = (
                "signed lines on every generator except "
                f"{sorted(exceptions)}, by the rule's shape"
            )
            return TypeReport(bound, 2, False, observed, kplus, kminus, note)
        note = "every generator holds a signed line, by the rule's shape"
        return TypeReport(bound, 1, False, observed, kplus, kminus, note)

    if observed:
        note = (
            f"{len(observed)} signed generator lines in the window; "
            "the tail images stay perturbed by rule"
        )
        return TypeReport(bound, 3, True, observed, kplus, kminus, note)
    if not kplus and not kminus:
        note = "no fixed or negated line exists in the window"
        return TypeReport(bound, 4, True, observed, kplus, kminus, note)
    note = (
        "no signed generator line in the window, but the kernel is nonzero, "
        "so a change of basis exposes signed lines"
    )
    return TypeReport(bound, 3, True, observed, kplus, kminus, note)


# ---------------------------------------------------------------------------
# evaluating free graded polynomials against a grading


def _check_degree(spec: AutomorphismSpec, variable: GradedVariable, value: Element) -> None:
    a0, a1 = spec.project(value)
    offending = a1 if variable.degree == 0 else a0
    if not offending.is_zero():
        raise DegreeMismatch(variable, value, offending)


def eval_graded_poly(
    poly: GradedPolynomial,
    assignment: Mapping[GradedVariable, Element],
    spec: AutomorphismSpec,
) -> Element:
    """Substitute homogeneous values for the variables of ``poly``.

    Every variable occurring in the polynomial needs a value, and each value
    must be homogeneous of the variable's degree in the grading induced by
    the spec (checked by projection; `DegreeMismatch` otherwise).
    """
    for variable in poly.variables():
        if variable not in assignment:
            raise ValueError(f"no value assigned to {variable}")
        _check_degree(spec, variable, assignment[variable])
    total = Element.zero()
    for word, coeff in poly.terms():
        prod = Element.one()
        for variable in word:
            prod = prod * assignment[variable]
            if prod.is_zero():
                break
        if not prod.is_zero():
            total = total + coeff * prod
    return total


def _random_element(rng: random.Random, bound: int) -> Element:
    out = Element.zero()
    for _ in range(rng.randint(1, 3)):
        length = rng.randint(0, min(3, bound))
        indices = tuple(sorted(rng.sample(range(1, bound + 1), length)))
        coeff = rng.choice((-2, -1, 1, 2))
        out = out + Element.monomial(indices, coeff)
    return out


def _random_homogeneous(
    rng: random.Random, spec: AutomorphismSpec, degree: int, bound: int, retries: int = 8
) -> Element | None:
    for _ in range(retries):
        candidate = _random_element(rng, bound)
        component = spec.project(candidate)[degree]
        if not component.is_zero():
            return component
    return None


def falsify_identity(
    poly: GradedPolynomial,
    spec: AutomorphismSpec,
    bound: int,
    trials: int = 200,
    seed: int = 0,
) -> Verdict:
    """Search for homogeneous substitutions that make ``poly`` nonzero.

    Each trial draws a random element supported on e_1..e_bound for every
    variable and projects it to the variable's degree; zero projections are
    redrawn a few times, then the trial is skipped.  Finding a nonzero value
    refutes the identity with an explicit assignment.  Not finding one is
    evidence only, reported as not-falsified with the search parameters.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    variables = poly.variables()
    rng = random.Random(seed)
    skipped = 0
    for trial in range(trials):
        assignment: dict[GradedVariable, Element] = {}
        for variable in variables:
            value = _random_homogeneous(rng, spec, variable.degree, bound)
            if value is None:
                break
            assignment[variable] = value
        else:
            value = eval_graded_poly(poly, assignment, spec)
            if not value.is_zero():
                return Verdict(
                    "identity", bound, COUNTEREXAMPLE,
                    {
                        "assignment": {str(v): el for v, el in assignment.items()},
                        "value": value,
                        "trial": trial,
                    },
                    info={"seed": seed},
                )
            continue
        skipped += 1
    return Verdict(
        "identity", bound, NOT_FALSIFIED,
        info={"trials": trials, "skipped": skipped, "seed": seed},
    )


def _projected_basis(spec: AutomorphismSpec, degree: int, bound: int) -> list[Element]:
    """Projections of all basis monomials on e_1..e_bound to one degree,
    deduplicated and nonzero.  These span the degree component within the
    window, since projection is linear and onto."""
    seen: set[Element] = set()
    out: list[Element] = []
    for r in range(bound + 1):
        for combo in itertools.combinations(range(1, bound + 1), r):
            component = spec.project(Element.monomial(combo))[degree]
            if not component.is_zero() and component not in seen:
                seen.add(component)
                out.append(component)
    return out


def _exhaustive_values(
    basis: Sequence[Element], coeffs: Iterable[int], max_terms: int
) -> list[Element]:
    nonzero = [Fraction(c) for c in coeffs if c]
    include_zero = any(not c for c in coeffs)
    seen: set[Element] = set()
    values: list[Element] = []
    if include_zero:
        seen.add(Element.zero())
        values.append(Element.zero())
    for r in range(1, max_terms + 1):
        for combo in itertools.combinations(basis, r):
            for weights in itertools.product(nonzero, repeat=r):
                value = Element.zero()
                for w, b in zip(weights, combo):
                    value = value + w * b
                if value not in seen:
                    seen.add(value)
                    values.append(value)
    return values


def falsify_identity_exhaustive(
    poly: GradedPolynomial,
    spec: AutomorphismSpec,
    bound: int,
    coeffs: Iterable[int] = (-1, 0, 1),
    max_terms: int = 2,
) -> Verdict:
    """Try every homogeneous substitution built from the projected basis.

    Candidate values for a variable are the combinations of at most
    ``max_terms`` projected basis monomials with the given coefficients.
    For a polynomial that is linear in each variable (every word uses a
    variable at most once), the single-monomial substitutions already decide
    the identity on the whole window-span; larger ``max_terms`` adds margin
    for nonlinear words.  The assignment count is exponential in the number
    of variables, so this is for small windows.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    variables = poly.variables()
    pools = []
    for variable in variables:
        basis = _projected_basis(spec, variable.degree, bound)
        pools.append(_exhaustive_values(basis, coeffs, max_terms))
    count = 0
    for choice in itertools.product(*pools):
        assignment = dict(zip(variables, choice))
        count += 1
        value = eval_graded_poly(poly, assignment, spec)
        if not value.is_zero():
            return Verdict(
                "identity", bound, COUNTEREXAMPLE,
                {
                    "assignment": {str(v): el for v, el in assignment.items()},
                    "value": value,
                },
                info={"exhaustive": True, "substitutions": count},
            )
    return Verdict(
        "identity", bound, NOT_FALSIFIED,
        info={
            "exhaustive": True,
            "substitutions": count,
            "maxTerms": max_terms,
            "coefficients": sorted(set(int(c) for c in coeffs)),
        },
    )
