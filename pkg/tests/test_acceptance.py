"""Acceptance criteria for the package, one test per criterion.

Each test prints a single ``[acceptance] criterion N PASS/FAIL`` line with the
elapsed time (run pytest with ``-s`` or check the captured output), then
asserts.  Criteria with a stated time budget fail when they run over it.
"""

import itertools
import time
from fractions import Fraction

from grasskit import (
    Element,
    HomogeneousKind,
    IndexSet,
    MethodAData,
    MethodBData,
    PerturbationError,
    check_anticommute,
    check_epsilon_products,
    check_involution,
    classify,
    epsilon_values,
    falsify_identity_exhaustive,
    fixed_line_kernel,
    homogeneous,
    is_canonical_type,
    method_a,
    method_b,
    method_c,
    mono_mul,
    parse_graded_poly,
)

e = Element.generator


def _finish(number, failures, description, elapsed, budget=None):
    if budget is not None and elapsed >= budget:
        failures = failures + [f"took {elapsed:.3f}s, budget {budget}s"]
    status = "FAIL" if failures else "PASS"
    print(f"[acceptance] criterion {number} {status}: {description} ({elapsed:.3f}s)")
    assert not failures, f"criterion {number}: " + "; ".join(failures)


def worked_a_data():
    return MethodAData(
        iplus=IndexSet.all_but([1]),
        iminus=IndexSet.of([]),
        d={1: Element.monomial((2, 3, 4))},
    )


def test_criterion_1_sign_sequence_values():
    start = time.perf_counter()
    values = epsilon_values(7)
    elapsed = time.perf_counter() - start
    failures = []
    if values != [1, 1, -1, 1, 1, 1, -1]:
        failures.append(f"got {values}")
    _finish(1, failures, "first seven sign-sequence values exact", elapsed, budget=0.001)


def test_criterion_2_prefix_product_rule():
    start = time.perf_counter()
    verdict = check_epsilon_products(10_000)
    elapsed = time.perf_counter() - start
    failures = []
    if not verdict.holds:
        failures.append(verdict.describe())
    _finish(2, failures, "prefix-product rule for n <= 10000", elapsed, budget=1.0)


def test_criterion_3_tail_family_verification():
    start = time.perf_counter()
    spec = method_c()
    failures = []
    for verdict in (
        check_anticommute(spec, 12),
        check_involution(spec, 12),
        is_canonical_type(spec, 12),
    ):
        if not verdict.holds:
            failures.append(verdict.describe())
    for sign in (1, -1):
        kernel = fixed_line_kernel(spec, 12, sign)
        if kernel:
            failures.append(f"sign {sign:+d} kernel not empty: {[str(v) for v in kernel]}")
    elapsed = time.perf_counter() - start
    _finish(
        3, failures,
        "epsilon-tail family: sweeps hold at bound 12 and no line is preserved",
        elapsed, budget=30.0,
    )


def test_criterion_4_tail_grid():
    start = time.perf_counter()
    failures = []
    for k, t, lam in itertools.product((0, 1, 2), (1, 3), (1, 2)):
        spec = method_b(MethodBData(k=k, t=t, lam=Fraction(lam)))
        verdict = check_involution(spec, 30)
        if not verdict.holds:
            failures.append(f"(k={k}, t={t}, lam={lam}): {verdict.describe()}")
        canonical = is_canonical_type(spec, 30)
        expect_odd_images = k % 2 == 1
        if canonical.holds != expect_odd_images:
            failures.append(
                f"(k={k}, t={t}, lam={lam}): canonical-type {canonical.status}, "
                f"expected {'holds' if expect_odd_images else 'counterexample'}"
            )
    elapsed = time.perf_counter() - start
    _finish(
        4, failures,
        "signed-head grid: involutions at bound 30, canonical type exactly for odd heads",
        elapsed, budget=5.0,
    )


def test_criterion_5_eigenprojections():
    start = time.perf_counter()
    spec = method_b(MethodBData(k=0, t=1, lam=Fraction(2)))
    failures = []
    for n in range(2, 11):
        a0, a1 = spec.project(e(n))
        want0 = Element.monomial((1, n))
        want1 = e(n) - want0
        if (a0, a1) != (want0, want1):
            failures.append(f"project(e{n}) gave ({a0}, {a1})")
        for m in range(1, 11):
            if a0 * e(m) != e(m) * a0:
                failures.append(f"degree-0 part of e{n} does not commute with e{m}")
    elapsed = time.perf_counter() - start
    _finish(
        5, failures,
        "scaled-tail eigenprojections in closed form, degree-0 parts central",
        elapsed,
    )


def test_criterion_6_cofinite_example_and_rejections():
    start = time.perf_counter()
    failures = []
    spec = method_a(worked_a_data())
    verdict = check_involution(spec, 30)
    if not verdict.holds:
        failures.append(verdict.describe())
    report = classify(spec, 12)
    if report.type_number != 2 or report.candidate:
        failures.append(f"expected exact type 2, got {report.describe()}")
    if 1 in report.i_beta:
        failures.append("generator 1 should not hold a signed line")

    mutations = [
        (MethodAData(IndexSet.all_but([1]), IndexSet.of([]),
                     {1: Element.monomial((2, 3))}), 1),
        (MethodAData(IndexSet.all_but([1]), IndexSet.of([]),
                     {1: Element.monomial((1, 2, 3))}), 2),
        (MethodAData(IndexSet.all_but([1, 2]), IndexSet.of([2]),
                     {1: Element.monomial((2, 3, 4))}), 3),
    ]
    for data, expected_condition in mutations:
        try:
            method_a(data)
        except PerturbationError as exc:
            if exc.condition != expected_condition:
                failures.append(
                    f"mutation for requirement {expected_condition} rejected as {exc.condition}"
                )
        else:
            failures.append(f"mutation for requirement {expected_condition} was accepted")
    elapsed = time.perf_counter() - start
    _finish(
        6, failures,
        "cofinite example verified and classified; bad perturbations rejected by requirement",
        elapsed,
    )


# ---------------------------------------------------------------------------
# criterion 7: kernels against a brute-force eigenvector search


def _rank(rows):
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    used = [False] * len(rows)
    rank = 0
    for c in range(ncols):
        pivot = None
        for i, row in enumerate(rows):
            if not used[i] and row[c]:
                pivot = i
                break
        if pivot is None:
            continue
        used[pivot] = True
        rank += 1
        for i, row in enumerate(rows):
            if i != pivot and row[c]:
                factor = row[c] / rows[pivot][c]
                rows[i] = [a - factor * b for a, b in zip(row, rows[pivot])]
    return rank


def _in_span(basis, vector):
    if not basis:
        return not any(vector)
    return _rank(basis) == _rank(basis + [vector])


def _generator_coords(el, dim):
    return [el.coefficient((i,)) for i in range(1, dim + 1)]


def built_in_specs():
    return [
        ("fixed head of width 3", homogeneous(HomogeneousKind("k", 3))),
        ("negated head of width 2", homogeneous(HomogeneousKind("kstar", 2))),
        ("alternating signs", homogeneous(HomogeneousKind("infty"))),
        ("all generators negated", homogeneous(HomogeneousKind("canonical"))),
        ("identity", homogeneous(HomogeneousKind("trivial"))),
        ("cofinite example", method_a(worked_a_data())),
        ("tail k=0 t=1 lam=2", method_b(MethodBData(0, 1, Fraction(2)))),
        ("tail k=1 t=1", method_b(MethodBData(1, 1))),
        ("tail k=1 t=3", method_b(MethodBData(1, 3))),
        ("epsilon tail", method_c()),
    ]


def test_criterion_7_kernels_match_brute_force():
    bound = 5
    start = time.perf_counter()
    failures = []
    grid = [c for c in itertools.product(range(-2, 3), repeat=bound) if any(c)]
    for name, spec in built_in_specs():
        images = [spec.image(i) for i in range(1, bound + 1)]
        for sign in (1, -1):
            kernel = fixed_line_kernel(spec, bound, sign)
            basis = [_generator_coords(v, bound) for v in kernel]
            for v in kernel:
                if spec.apply(v) != sign * v:
                    failures.append(f"{name} sign {sign:+d}: basis vector {v} not an eigenvector")
            hits = 0
            for coeffs in grid:
                candidate = Element(
                    (((i + 1,), c) for i, c in enumerate(coeffs) if c)
                )
                image = Element.zero()
                for c, img in zip(coeffs, images):
                    if c:
                        image = image + c * img
                if image == sign * candidate:
                    hits += 1
                    if not _in_span(basis, [Fraction(c) for c in coeffs]):
                        failures.append(
                            f"{name} sign {sign:+d}: brute-force eigenvector {coeffs} "
                            "is outside the reported kernel"
                        )
            if not kernel and hits:
                failures.append(f"{name} sign {sign:+d}: kernel empty but {hits} grid hits")
            if kernel and not hits:
                failures.append(f"{name} sign {sign:+d}: kernel nonempty but no grid hits")
    elapsed = time.perf_counter() - start
    _finish(
        7, failures,
        "window kernels agree with a brute-force grid search for every built-in family",
        elapsed, budget=10.0,
    )


# ---------------------------------------------------------------------------
# criterion 8: the product on monomials


def _bubble_sign(seq):
    arr = list(seq)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
            elif arr[j] == arr[j + 1]:
                return None
    return sign


def _chain(x, y, z):
    step = mono_mul(x, y)
    if step is None:
        return None
    s1, m = step
    step = mono_mul(m, z)
    if step is None:
        return None
    s2, m = step
    return s1 * s2, m


def test_criterion_8_monomial_product():
    start = time.perf_counter()
    failures = []
    subsets8 = [
        tuple(c)
        for r in range(9)
        for c in itertools.combinations(range(1, 9), r)
    ]
    for x in subsets8:
        for y in subsets8:
            got = mono_mul(x, y)
            sign = _bubble_sign(x + y)
            expected = None if sign is None else (sign, tuple(sorted(x + y)))
            if got != expected:
                failures.append(f"mono_mul({x}, {y}) = {got}, oracle says {expected}")
                break
        if failures:
            break
    subsets6 = [
        tuple(c)
        for r in range(7)
        for c in itertools.combinations(range(1, 7), r)
    ]
    for x in subsets6:
        for y in subsets6:
            for z in subsets6:
                left = _chain(x, y, z)
                step = mono_mul(y, z)
                if step is None:
                    right = None
                else:
                    s, m = step
                    step = mono_mul(x, m)
                    right = None if step is None else (s * step[0], step[1])
                if left != right:
                    failures.append(f"associativity fails on {x}, {y}, {z}")
                    break
            if failures:
                break
        if failures:
            break
    elapsed = time.perf_counter() - start
    _finish(
        8, failures,
        "product signs match the parity oracle on all pairs (indices <= 8); "
        "associativity on all triples (indices <= 6)",
        elapsed,
    )


def test_criterion_9_graded_identities():
    start = time.perf_counter()
    grading = homogeneous(HomogeneousKind("canonical"))
    failures = []
    for text, expected in (
        ("[y1, y2]", "not-falsified"),
        ("z1*z2 + z2*z1", "not-falsified"),
        ("[z1, z2]", "counterexample"),
    ):
        verdict = falsify_identity_exhaustive(
            parse_graded_poly(text), grading, bound=4, coeffs=(-1, 0, 1), max_terms=2
        )
        if verdict.status != expected:
            failures.append(f"{text}: {verdict.status}, expected {expected}")
    elapsed = time.perf_counter() - start
    _finish(
        9, failures,
        "graded identities decided exhaustively over the bound-4 window",
        elapsed, budget=60.0,
    )
