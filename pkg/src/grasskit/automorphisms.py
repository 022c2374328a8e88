"""Candidate automorphisms of the exterior algebra, given by generator images.

A linear map is described by a `GeneratorRule`: a closed-form recipe producing
the image of each generator e_i.  The map extends to monomials as the product
of the images and then linearly.  Such an extension is an algebra endomorphism
exactly when the images pairwise anticommute, which `check_anticommute` sweeps
up to a bound; `check_involution` then sweeps the order-2 condition on
generators.

Verification here is bounded.  A clean sweep is a proof only when the rule is
finitary (explicit exceptions over a sign pattern): past the exception region
and the supports of the exceptional images, nothing new can happen.  Rules
report that through `decisive_bound`.  Closed-form families get evidence from
sweeps, and the construction helpers attach structural certificates where the
general argument is sound.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping

from .algebra import Element, Monomial, as_monomial

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"
NOT_FALSIFIED = "not-falsified"
SKIPPED = "skipped"

STRUCTURAL = "structural"
EVIDENCE = "evidence"
UNVERIFIED = "unverified"


def _render(value):
    if isinstance(value, Element):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_render(v) for v in value]
    return value


@dataclass(frozen=True)
class Verdict:
    """Outcome of a bounded check.

    ``status`` is one of holds, counterexample, not-falsified or skipped.
    The counterexample payload keeps Element values unrendered; `to_json`
    converts them to their text form.
    """

    check: str
    bound: int
    status: str
    counterexample: Mapping[str, object] | None = None
    info: Mapping[str, object] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.status in (HOLDS, NOT_FALSIFIED)

    def to_json(self) -> dict:
        out: dict = {"check": self.check, "bound": self.bound, "status": self.status}
        if self.counterexample is not None:
            out["counterexample"] = _render(dict(self.counterexample))
        if self.info:
            out.update(_render(dict(self.info)))
        return out

    def describe(self) -> str:
        if self.status == SKIPPED:
            reason = self.info.get("reason", "")
            return f"{self.check}: skipped ({reason})"
        if self.status == NOT_FALSIFIED:
            detail = "exhaustive over the window" if self.info.get("exhaustive") else (
                f"{self.info.get('trials', '?')} trials, seed {self.info.get('seed', '?')}"
            )
            return f"{self.check}: not falsified at bound {self.bound} ({detail})"
        if self.holds:
            extra = " (complete)" if self.info.get("complete") else ""
            return f"{self.check}: holds up to bound {self.bound}{extra}"
        parts = ", ".join(f"{k}={_render(v)}" for k, v in (self.counterexample or {}).items())
        return f"{self.check}: counterexample at bound {self.bound} [{parts}]"


@dataclass(frozen=True)
class Certificate:
    """Verification record carried by a spec.

    structural: the defining shape of the rule proves the map is an involutive
    automorphism (note says why).  evidence: sweeps passed up to ``bound``.
    """

    kind: str = UNVERIFIED
    bound: int = 0
    note: str = ""

    def covers(self, bound: int) -> bool:
        if self.kind == STRUCTURAL:
            return True
        return self.kind == EVIDENCE and bound <= self.bound


class VerificationError(ValueError):
    """A required verification failed; carries the failing verdict."""

    def __init__(self, verdict: Verdict, message: str | None = None):
        super().__init__(message or verdict.describe())
        self.verdict = verdict


class AnticommutationError(VerificationError):
    """Generator images do not pairwise anticommute, so the linear extension

    is not multiplicative and squaring it is meaningless."""


class InvolutionError(VerificationError):
    """The map is an endomorphism but fails to square to the identity."""


# ---------------------------------------------------------------------------
# rules


class GeneratorRule:
    """Closed-form description of a linear map through generator images."""

    def image(self, i: int) -> Element:
        raise NotImplementedError

    def eventually_signed(self) -> bool:
        """True when all but finitely many generators map to +-themselves."""
        return False

    def signed_exceptions(self) -> tuple[int, ...] | None:
        """The exact finite set of generators whose image is not a signed
        generator, when the rule's shape makes that set known; else None."""
        return None

    def decisive_bound(self) -> int | None:
        """Bound from which a clean sweep is a complete proof, when finitary."""
        return None

    def describe(self) -> dict:
        return {"rule": type(self).__name__}


def _check_sign(s: int) -> int:
    if s not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {s!r}")
    return s


@dataclass(frozen=True)
class SignRule(GeneratorRule):
    """Each generator maps to a signed copy of itself.

    The default sign may depend on the parity of the index (odd_sign applies
    to e1, e3, ...), with a finite list of per-index exceptions on top.
    """

    odd_sign: int = -1
    even_sign: int = -1
    exceptions: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        _check_sign(self.odd_sign)
        _check_sign(self.even_sign)
        seen = {}
        for idx, s in self.exceptions:
            if idx < 1:
                raise ValueError(f"exception index must be >= 1, got {idx}")
            _check_sign(s)
            seen[idx] = s
        normalized = tuple(sorted(seen.items()))
        object.__setattr__(self, "exceptions", normalized)

    def sign(self, i: int) -> int:
        for idx, s in self.exceptions:
            if idx == i:
                return s
        return self.odd_sign if i & 1 else self.even_sign

    def image(self, i: int) -> Element:
        return Element.monomial((i,), self.sign(i))

    def eventually_signed(self) -> bool:
        return True

    def signed_exceptions(self) -> tuple[int, ...]:
        return ()

    def decisive_bound(self) -> int:
        return 1

    def describe(self) -> dict:
        out: dict = {"rule": "signs", "oddSign": self.odd_sign, "evenSign": self.even_sign}
        if self.exceptions:
            out["exceptions"] = {str(i): s for i, s in self.exceptions}
        return out


def _frozen_element_map(pairs) -> tuple[tuple[int, Element], ...]:
    items = dict(pairs)
    for idx in items:
        if idx < 1:
            raise ValueError(f"generator index must be >= 1, got {idx}")
    return tuple(sorted(items.items()))


@dataclass(frozen=True)
class PerturbedSignRule(GeneratorRule):
    """A sign pattern with finitely many generators flipped and perturbed.

    For an index j in the perturbation map the image is -e_j + d_j; every
    other index follows the base sign rule.
    """

    base: SignRule
    perturbations: tuple[tuple[int, Element], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "perturbations", _frozen_element_map(self.perturbations))

    def perturbation_map(self) -> dict[int, Element]:
        return dict(self.perturbations)

    def image(self, i: int) -> Element:
        for idx, d in self.perturbations:
            if idx == i:
                return Element.monomial((i,), -1) + d
        return self.base.image(i)

    def eventually_signed(self) -> bool:
        return True

    def signed_exceptions(self) -> tuple[int, ...]:
        return tuple(idx for idx, d in self.perturbations if not d.is_zero())

    def decisive_bound(self) -> int:
        top = max((idx for idx, _ in self.perturbations), default=0)
        top = max(top, max((i for i, _ in self.base.exceptions), default=0))
        support = max((d.support_bound() for _, d in self.perturbations), default=0)
        return max(top, support) + 1

    def describe(self) -> dict:
        return {
            "rule": "perturbed-signs",
            "base": self.base.describe(),
            "perturbed": {str(i): str(d) for i, d in self.perturbations},
        }


@dataclass(frozen=True)
class TailRule(GeneratorRule):
    """A finite signed head, then a uniform perturbed tail.

    For n <= len(head_signs) the image is head_signs[n-1] * e_n.  Past the
    head, e_n maps to tail_sign * e_n + c_n * (prefix monomial) * e_n, where
    c_n is tail_coeff unless overridden.  The prefix must live inside the
    head so the tail images are well formed.
    """

    head_signs: tuple[int, ...]
    prefix: Monomial
    tail_coeff: Fraction
    tail_sign: int = -1
    overrides: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        for s in self.head_signs:
            _check_sign(s)
        _check_sign(self.tail_sign)
        prefix = as_monomial(self.prefix)
        if prefix and prefix[-1] > len(self.head_signs):
            raise ValueError("prefix indices must lie within the signed head")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail_coeff", Fraction(self.tail_coeff))
        cleaned = {}
        for n, c in self.overrides:
            if n <= len(self.head_signs):
                raise ValueError(f"override index {n} lies inside the signed head")
            cleaned[n] = Fraction(c)
        object.__setattr__(self, "overrides", tuple(sorted(cleaned.items())))

    @property
    def threshold(self) -> int:
        return len(self.head_signs)

    def coeff_at(self, n: int) -> Fraction:
        for idx, c in self.overrides:
            if idx == n:
                return c
        return self.tail_coeff

    def image(self, n: int) -> Element:
        if n < 1:
            raise ValueError(f"generator index must be >= 1, got {n}")
        if n <= self.threshold:
            return Element.monomial((n,), self.head_signs[n - 1])
        out = Element.monomial((n,), self.tail_sign)
        c = self.coeff_at(n)
        if c:
            out = out + Element.monomial(self.prefix + (n,), c)
        return out

    def eventually_signed(self) -> bool:
        return not self.prefix or self.tail_coeff == 0

    def signed_exceptions(self) -> tuple[int, ...] | None:
        if not self.eventually_signed():
            return None
        if not self.prefix:
            return ()
        return tuple(n for n, c in self.overrides if c)

    def describe(self) -> dict:
        return {
            "rule": "signed-head-perturbed-tail",
            "headSigns": list(self.head_signs),
            "prefix": "".join(f"e{i}" for i in self.prefix) or "1",
            "tailSign": self.tail_sign,
            "tailCoeff": str(self.tail_coeff),
            "overrides": {str(n): str(c) for n, c in self.overrides},
        }


@dataclass(frozen=True)
class CustomFinite(GeneratorRule):
    """Explicit images on finitely many generators, a sign rule beyond."""

    images: tuple[tuple[int, Element], ...]
    base: SignRule = SignRule(1, 1)

    def __post_init__(self):
        object.__setattr__(self, "images", _frozen_element_map(self.images))

    def image_map(self) -> dict[int, Element]:
        return dict(self.images)

    def image(self, i: int) -> Element:
        for idx, el in self.images:
            if idx == i:
                return el
        return self.base.image(i)

    def eventually_signed(self) -> bool:
        return True

    def signed_exceptions(self) -> tuple[int, ...]:
        out = []
        for idx, el in self.images:
            gen = Element.generator(idx)
            if el != gen and el != -gen:
                out.append(idx)
        return tuple(out)

    def decisive_bound(self) -> int:
        top = max((idx for idx, _ in self.images), default=0)
        top = max(top, max((i for i, _ in self.base.exceptions), default=0))
        support = max((el.support_bound() for _, el in self.images), default=0)
        return max(top, support) + 1

    def describe(self) -> dict:
        return {
            "rule": "custom",
            "images": {str(i): str(el) for i, el in self.images},
            "base": self.base.describe(),
        }


@dataclass(frozen=True)
class ComposedRule(GeneratorRule):
    """Generator images of outer after inner, evaluated lazily."""

    outer: GeneratorRule
    inner: GeneratorRule

    def image(self, i: int) -> Element:
        return apply_rule(self.outer, self.inner.image(i))

    def describe(self) -> dict:
        return {"rule": "composed", "outer": self.outer.describe(), "inner": self.inner.describe()}


# ---------------------------------------------------------------------------
# specs and the linear extension


def apply_rule(rule: GeneratorRule, a: Element) -> Element:
    """Extend the rule to an arbitrary element: monomials map to the ordered
    product of the generator images, scalars are fixed, then extend linearly."""
    cache: dict[int, Element] = {}
    total = Element.zero()
    for mono, coeff in a.terms():
        prod = Element.one()
        for i in mono:
            img = cache.get(i)
            if img is None:
                img = rule.image(i)
                cache[i] = img
            prod = prod * img
            if prod.is_zero():
                break
        if not prod.is_zero():
            total = total + coeff * prod
    return total


@dataclass(frozen=True)
class AutomorphismSpec:
    """A generator rule together with its verification record."""

    rule: GeneratorRule
    certificate: Certificate = Certificate()

    def image(self, i: int) -> Element:
        return self.rule.image(i)

    def apply(self, a: Element) -> Element:
        return apply_rule(self.rule, a)

    def project(self, a: Element) -> tuple[Element, Element]:
        """Eigenprojections onto the fixed and the negated component.

        Returns (a0, a1) with a0 = (a + phi(a))/2 and a1 = (a - phi(a))/2,
        so a = a0 + a1, phi(a0) = a0 and phi(a1) = -a1.  Requires the spec
        to be verified involutive up to the element's support.
        """
        require_involutive(self, max(a.support_bound(), 1))
        fa = self.apply(a)
        return (a + fa) / 2, (a - fa) / 2

    def fixed_component(self, i: int) -> Element:
        """The fixed-part projection (e_i + phi(e_i))/2 of a generator."""
        return self.project(Element.generator(i))[0]

    def with_certificate(self, certificate: Certificate) -> "AutomorphismSpec":
        return replace(self, certificate=certificate)

    def describe(self) -> dict:
        out = self.rule.describe()
        if self.certificate.kind != UNVERIFIED:
            out["certified"] = self.certificate.kind
            if self.certificate.kind == EVIDENCE:
                out["certifiedBound"] = self.certificate.bound
        return out


def image_of_generator(spec: AutomorphismSpec, i: int) -> Element:
    if i < 1:
        raise ValueError(f"generator index must be >= 1, got {i}")
    return spec.image(i)


def _decisive_info(rule: GeneratorRule, bound: int) -> dict:
    d = rule.decisive_bound()
    if d is not None and bound >= d:
        return {"complete": True}
    return {}


def check_anticommute(spec: AutomorphismSpec, bound: int) -> Verdict:
    """Sweep image(i)image(j) + image(j)image(i) = 0 for 1 <= i <= j <= bound.

    This is exactly the condition under which the linear extension is
    multiplicative.  The smallest failing pair is reported.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    imgs = [spec.image(i) for i in range(1, bound + 1)]
    for i in range(1, bound + 1):
        for j in range(i, bound + 1):
            u, v = imgs[i - 1], imgs[j - 1]
            residual = u * v + v * u
            if not residual.is_zero():
                return Verdict(
                    "anticommute", bound, COUNTEREXAMPLE,
                    {"i": i, "j": j, "residual": residual},
                )
    return Verdict("anticommute", bound, HOLDS, info=_decisive_info(spec.rule, bound))


def check_involution(spec: AutomorphismSpec, bound: int) -> Verdict:
    """Sweep phi(phi(e_i)) = e_i for i <= bound.

    Anticommutation is a precondition: without it the extension is not an
    algebra map and iterating it proves nothing, so a failing spec is
    rejected with `AnticommutationError`.
    """
    pre = check_anticommute(spec, bound)
    if not pre.holds:
        raise AnticommutationError(pre)
    for i in range(1, bound + 1):
        gen = Element.generator(i)
        sq = spec.apply(spec.image(i))
        if sq != gen:
            return Verdict(
                "involution", bound, COUNTEREXAMPLE,
                {"i": i, "got": sq, "residual": sq - gen},
            )
    return Verdict("involution", bound, HOLDS, info=_decisive_info(spec.rule, bound))


def is_canonical_type(spec: AutomorphismSpec, bound: int) -> Verdict:
    """Check that every generator image up to the bound is parity-odd.

    Maps with this property send each e_i into the odd part of the algebra;
    the even part of some image is the reported counterexample.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    for i in range(1, bound + 1):
        even, _ = spec.image(i).parity_split()
        if not even.is_zero():
            return Verdict(
                "canonical-type", bound, COUNTEREXAMPLE,
                {"i": i, "evenPart": even},
            )
    return Verdict("canonical-type", bound, HOLDS, info=_decisive_info(spec.rule, bound))


def certify(spec: AutomorphismSpec, bound: int) -> AutomorphismSpec:
    """Run both sweeps and return the spec carrying the evidence.

    Raises AnticommutationError / InvolutionError on failure.  A structural
    certificate is kept as is.
    """
    if spec.certificate.kind == STRUCTURAL:
        return spec
    verdict = check_involution(spec, bound)
    if not verdict.holds:
        raise InvolutionError(verdict)
    if spec.certificate.kind == EVIDENCE and spec.certificate.bound >= bound:
        return spec
    return spec.with_certificate(Certificate(EVIDENCE, bound, "verified by sweep"))


def require_involutive(spec: AutomorphismSpec, bound: int) -> None:
    """Ensure the involution property is certified up to the bound, running
    the sweeps on the spot when the certificate does not already cover it."""
    if spec.certificate.covers(bound):
        return
    verdict = check_involution(spec, bound)
    if not verdict.holds:
        raise InvolutionError(verdict)


# ---------------------------------------------------------------------------
# composition

_FINITARY = (SignRule, PerturbedSignRule, CustomFinite)


def _compose_signs(outer: SignRule, inner: SignRule) -> SignRule:
    indices = {i for i, _ in outer.exceptions} | {i for i, _ in inner.exceptions}
    odd = outer.odd_sign * inner.odd_sign
    even = outer.even_sign * inner.even_sign
    exceptions = []
    for i in sorted(indices):
        s = outer.sign(i) * inner.sign(i)
        if s != (odd if i & 1 else even):
            exceptions.append((i, s))
    return SignRule(odd, even, tuple(exceptions))


def _base_of(rule: GeneratorRule) -> SignRule:
    if isinstance(rule, SignRule):
        return rule
    if isinstance(rule, (PerturbedSignRule, CustomFinite)):
        return rule.base
    raise TypeError(f"no sign base for {type(rule).__name__}")


def _explicit_indices(rule: GeneratorRule) -> set[int]:
    out = {i for i, _ in _base_of(rule).exceptions}
    if isinstance(rule, PerturbedSignRule):
        out |= {i for i, _ in rule.perturbations}
    if isinstance(rule, CustomFinite):
        out |= {i for i, _ in rule.images}
    return out


def compose(outer: AutomorphismSpec, inner: AutomorphismSpec) -> AutomorphismSpec:
    """The spec whose generator images are outer applied after inner.

    Finitary inputs are materialized into a finitary result, so bounded
    verification of the composite stays decisive; anything involving a
    closed-form family stays lazy.  The result carries no certificate:
    composing two involutions is an involution only when they commute.
    """
    r1, r2 = outer.rule, inner.rule
    if isinstance(r1, SignRule) and isinstance(r2, SignRule):
        return AutomorphismSpec(_compose_signs(r1, r2))
    if isinstance(r1, _FINITARY) and isinstance(r2, _FINITARY):
        top = max(_explicit_indices(r1) | _explicit_indices(r2), default=0)
        images = []
        for i in range(1, top + 1):
            images.append((i, apply_rule(r1, r2.image(i))))
        base = _compose_signs(_base_of(r1), _base_of(r2))
        return AutomorphismSpec(CustomFinite(tuple(images), base))
    return AutomorphismSpec(ComposedRule(r1, r2))
