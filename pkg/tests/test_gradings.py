from fractions import Fraction

import pytest

from grasskit import (
    AutomorphismSpec,
    CustomFinite,
    DegreeMismatch,
    Element,
    GeneratorRule,
    GradedPolynomial,
    InvolutionError,
    SignRule,
    classify,
    commutator,
    eval_graded_poly,
    falsify_identity,
    falsify_identity_exhaustive,
    fixed_line_kernel,
    homogeneous,
    HomogeneousKind,
    method_a,
    method_b,
    method_c,
    MethodAData,
    MethodBData,
    IndexSet,
    parse_graded_poly,
    yvar,
    zvar,
)

e = Element.generator

CANONICAL = homogeneous(HomogeneousKind("canonical"))
TRIVIAL = homogeneous(HomogeneousKind("trivial"))
SWAP = AutomorphismSpec(CustomFinite(((1, e(2)), (2, e(1)))))


def prop_minus():
    return method_b(MethodBData(k=0, t=1, lam=Fraction(2)))


def worked_a():
    return method_a(
        MethodAData(
            iplus=IndexSet.all_but([1]),
            iminus=IndexSet.of([]),
            d={1: Element.monomial((2, 3, 4))},
        )
    )


class SwapWithPerturbedTail(GeneratorRule):
    """e1 and e2 trade places; every later generator picks up an e1e2 tail.

    An involution that preserves no generator line but does fix the plane
    spanned by e1 + e2; used to exercise the change-of-basis verdict.
    """

    def image(self, i: int) -> Element:
        if i == 1:
            return e(2)
        if i == 2:
            return e(1)
        return -e(i) + Element.monomial((1, 2, i))


# ---------------------------------------------------------------------------
# signed-line kernels


def test_kernels_of_the_sign_gradings():
    assert fixed_line_kernel(CANONICAL, 4, 1) == []
    assert fixed_line_kernel(CANONICAL, 4, -1) == [e(1), e(2), e(3), e(4)]
    assert fixed_line_kernel(TRIVIAL, 4, 1) == [e(1), e(2), e(3), e(4)]
    assert fixed_line_kernel(TRIVIAL, 4, -1) == []


def test_kernels_of_the_swap():
    assert fixed_line_kernel(SWAP, 3, 1) == [e(1) + e(2), e(3)]
    assert fixed_line_kernel(SWAP, 3, -1) == [e(2) - e(1)]


def test_kernels_of_the_perturbed_tail():
    pm = prop_minus()
    assert fixed_line_kernel(pm, 5, 1) == []
    assert fixed_line_kernel(pm, 5, -1) == [e(1)]


def test_kernels_of_the_tail_family_are_empty():
    phi = method_c()
    assert fixed_line_kernel(phi, 6, 1) == []
    assert fixed_line_kernel(phi, 6, -1) == []


def test_kernel_members_are_eigenvectors():
    for spec in (SWAP, prop_minus(), worked_a()):
        for sign in (1, -1):
            for v in fixed_line_kernel(spec, 6, sign):
                assert spec.apply(v) == sign * v


def test_kernel_validation():
    with pytest.raises(ValueError):
        fixed_line_kernel(CANONICAL, 4, 0)
    with pytest.raises(ValueError):
        fixed_line_kernel(CANONICAL, 0, 1)


def test_kernel_requires_an_involution():
    bad = AutomorphismSpec(CustomFinite(((1, 2 * e(1)),)))
    with pytest.raises(InvolutionError):
        fixed_line_kernel(bad, 3, 1)


# ---------------------------------------------------------------------------
# the four shapes


def test_classify_signed_everywhere():
    report = classify(homogeneous(HomogeneousKind("k", 3)), 10)
    assert report.type_number == 1
    assert not report.candidate
    assert report.i_beta == tuple(range(1, 11))
    assert report.kernel_plus == (e(1), e(2), e(3))
    assert report.kernel_minus == tuple(e(i) for i in range(4, 11))


def test_classify_cofinite_signed_region():
    report = classify(worked_a(), 6)
    assert report.type_number == 2
    assert not report.candidate
    assert report.i_beta == (2, 3, 4, 5, 6)
    assert "[1]" in report.note
    assert report.kernel_minus == ()


def test_classify_finitely_many_signed_lines():
    report = classify(prop_minus(), 5)
    assert report.type_number == 3
    assert report.candidate
    assert report.i_beta == (1,)
    assert report.kernel_minus == (e(1),)
    assert report.kernel_plus == ()


def test_classify_no_preserved_line():
    report = classify(method_c(), 5)
    assert report.type_number == 4
    assert report.candidate
    assert report.i_beta == ()
    assert report.kernel_plus == ()
    assert report.kernel_minus == ()


def test_classify_signed_lines_after_basis_change():
    spec = AutomorphismSpec(SwapWithPerturbedTail())
    report = classify(spec, 4)
    assert report.type_number == 3
    assert report.candidate
    assert report.i_beta == ()
    assert report.kernel_plus == (e(1) + e(2),)
    assert "change of basis" in report.note


def test_classify_type2_for_custom_exceptions():
    report = classify(SWAP, 4)
    assert report.type_number == 2
    assert not report.candidate
    assert "[1, 2]" in report.note


def test_classify_consistency_between_kernels_and_window():
    # a type-4 candidate must have no signed generator line either
    report = classify(method_c(), 4)
    if not report.kernel_plus and not report.kernel_minus:
        assert report.i_beta == ()


def test_type_report_payload():
    report = classify(prop_minus(), 4)
    payload = report.to_json()
    assert payload["type"] == 3
    assert payload["candidate"] is True
    assert payload["iBeta"] == [1]
    assert payload["kernelMinus"] == ["e1"]
    assert "type 3 (candidate)" in report.describe()


def test_classify_validation():
    with pytest.raises(ValueError):
        classify(CANONICAL, 0)


# ---------------------------------------------------------------------------
# evaluating polynomials against a grading


def test_eval_commutator_of_odd_elements():
    poly = parse_graded_poly("[z1, z2]")
    value = eval_graded_poly(poly, {zvar(1): e(1), zvar(2): e(2)}, CANONICAL)
    assert value == 2 * Element.monomial((1, 2))


def test_eval_anticommutator_of_odd_elements():
    poly = parse_graded_poly("z1*z2 + z2*z1")
    value = eval_graded_poly(poly, {zvar(1): e(1), zvar(2): e(2)}, CANONICAL)
    assert value.is_zero()


def test_eval_even_values():
    poly = parse_graded_poly("y1*y1")
    y = 2 + Element.monomial((1, 2))
    value = eval_graded_poly(poly, {yvar(1): y}, CANONICAL)
    assert value == 4 + 4 * Element.monomial((1, 2))


def test_eval_constant_and_zero_polynomials():
    assert eval_graded_poly(GradedPolynomial.constant(3), {}, CANONICAL) == 3
    assert eval_graded_poly(GradedPolynomial.zero(), {}, CANONICAL).is_zero()


def test_eval_rejects_missing_assignments():
    poly = parse_graded_poly("[z1, z2]")
    with pytest.raises(ValueError, match="no value assigned to z2"):
        eval_graded_poly(poly, {zvar(1): e(1)}, CANONICAL)


def test_eval_rejects_degree_mismatch():
    poly = parse_graded_poly("z1")
    with pytest.raises(DegreeMismatch) as info:
        eval_graded_poly(poly, {zvar(1): 1 + e(1)}, CANONICAL)
    assert info.value.variable == zvar(1)
    assert info.value.offending == Element.one()


def test_eval_uses_the_grading_of_the_spec():
    # e2 - e1e2 is negated by the perturbed-tail involution, so it is a
    # valid degree-1 value there even though it is not monomial-homogeneous
    pm = prop_minus()
    v = e(2) - Element.monomial((1, 2))
    assert eval_graded_poly(parse_graded_poly("z1"), {zvar(1): v}, pm) == v
    with pytest.raises(DegreeMismatch):
        eval_graded_poly(parse_graded_poly("z1"), {zvar(1): v}, CANONICAL)


# ---------------------------------------------------------------------------
# randomized falsification


def test_falsify_finds_the_odd_commutator():
    verdict = falsify_identity(parse_graded_poly("[z1, z2]"), CANONICAL, 4, trials=50, seed=0)
    assert verdict.status == "counterexample"
    assignment = verdict.counterexample["assignment"]
    rebuilt = {zvar(1): assignment["z1"], zvar(2): assignment["z2"]}
    value = eval_graded_poly(parse_graded_poly("[z1, z2]"), rebuilt, CANONICAL)
    assert value == verdict.counterexample["value"]
    assert not value.is_zero()


def test_falsify_is_deterministic_per_seed():
    poly = parse_graded_poly("[z1, z2]")
    a = falsify_identity(poly, CANONICAL, 4, trials=50, seed=7)
    b = falsify_identity(poly, CANONICAL, 4, trials=50, seed=7)
    assert a.to_json() == b.to_json()


def test_falsify_leaves_true_identities_standing():
    verdict = falsify_identity(parse_graded_poly("[y1, y2]"), CANONICAL, 4, trials=60, seed=0)
    assert verdict.status == "not-falsified"
    assert verdict.holds
    assert verdict.info["trials"] == 60
    assert verdict.info["skipped"] == 0


def test_falsify_skips_trials_without_odd_values():
    # the trivial grading has no degree-1 part at all
    verdict = falsify_identity(parse_graded_poly("[z1, z2]"), TRIVIAL, 4, trials=25, seed=0)
    assert verdict.status == "not-falsified"
    assert verdict.info["skipped"] == 25


def test_falsify_commutator_of_plain_elements():
    # under the trivial grading everything is even, and even elements of the
    # whole algebra certainly do not commute
    verdict = falsify_identity(parse_graded_poly("[y1, y2]"), TRIVIAL, 4, trials=50, seed=0)
    assert verdict.status == "counterexample"


def test_falsify_validation():
    poly = parse_graded_poly("[z1, z2]")
    with pytest.raises(ValueError):
        falsify_identity(poly, CANONICAL, 0)
    with pytest.raises(ValueError):
        falsify_identity(poly, CANONICAL, 4, trials=0)


# ---------------------------------------------------------------------------
# exhaustive falsification


def test_exhaustive_counterexample_for_the_odd_commutator():
    verdict = falsify_identity_exhaustive(parse_graded_poly("[z1, z2]"), CANONICAL, 3)
    assert verdict.status == "counterexample"
    assignment = verdict.counterexample["assignment"]
    rebuilt = {zvar(1): assignment["z1"], zvar(2): assignment["z2"]}
    value = eval_graded_poly(parse_graded_poly("[z1, z2]"), rebuilt, CANONICAL)
    assert value == verdict.counterexample["value"]


def test_exhaustive_odd_squares_vanish():
    verdict = falsify_identity_exhaustive(parse_graded_poly("z1*z1"), CANONICAL, 3)
    assert verdict.status == "not-falsified"
    assert verdict.info["exhaustive"] is True
    # four odd monomials at bound 3, signed singles and pairs plus zero
    assert verdict.info["substitutions"] == 33


def test_exhaustive_describe_mentions_the_window():
    verdict = falsify_identity_exhaustive(parse_graded_poly("z1*z1"), CANONICAL, 2)
    assert "exhaustive over the window" in verdict.describe()


def test_exhaustive_validation():
    poly = parse_graded_poly("z1*z1")
    with pytest.raises(ValueError):
        falsify_identity_exhaustive(poly, CANONICAL, 0)
    with pytest.raises(ValueError):
        falsify_identity_exhaustive(poly, CANONICAL, 2, max_terms=0)


def test_exhaustive_commutator_of_even_elements_vanishes():
    verdict = falsify_identity_exhaustive(
        commutator(yvar(1), yvar(2)), CANONICAL, 3, max_terms=1
    )
    assert verdict.status == "not-falsified"
