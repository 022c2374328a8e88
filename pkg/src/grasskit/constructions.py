"""Ready-made order-2 automorphism families, with validation.

Everything here produces an `AutomorphismSpec` whose defining shape proves it
is an involutive automorphism, so the specs carry structural certificates.
The families:

* `homogeneous` flips the sign of each generator according to a 0/1 degree
  assignment; the induced decomposition is a grading with both components
  spanned by monomials.
* `method_a` keeps a cofinite set of generators on signed lines and adds a
  finite set of perturbed generators -e_j + d_j.  The d_j must be parity-odd,
  supported on the signed region, and use an even number of negated factors
  per monomial; each requirement is checked and violations are rejected with
  the requirement number.
* `method_b` negates a finite block after a fixed head and perturbs the whole
  tail by scalar multiples of one prefix monomial.  The negated block must
  have odd width.
* `method_c` scales e_i by the sign sequence `epsilon` and adds the tail
  monomial w_i = e1 e2 ... e_{2i+1}.  No generator line, and in fact no line
  at all, is preserved: the tails w_i are linearly independent, so a fixed or
  negated combination would force all its coefficients to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .algebra import Element
from .automorphisms import (
    COUNTEREXAMPLE,
    HOLDS,
    STRUCTURAL,
    AutomorphismSpec,
    Certificate,
    GeneratorRule,
    PerturbedSignRule,
    SignRule,
    TailRule,
    Verdict,
)


class ConstructionError(ValueError):
    """A family's parameters fail validation."""


class PartitionError(ConstructionError):
    """The signed/perturbed index sets do not split the naturals properly."""


class PerturbationError(ConstructionError):
    """A perturbation element breaks one of the three requirements.

    ``condition`` is 1 (parity-odd), 2 (supported on the signed region) or
    3 (even count of negated factors per monomial).
    """

    def __init__(self, index: int, condition: int, message: str):
        super().__init__(f"d[{index}]: {message}")
        self.index = index
        self.condition = condition


class TailParameterError(ConstructionError):
    """Bad tail-family parameters; ``code`` names the failed requirement."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# the sign sequence and its product rule


def epsilon(i: int) -> int:
    """The +-1 sequence driving `method_c`.

    Even positions are +1.  An odd position 2n-1 is -1 exactly when n falls
    in a dyadic window [2^m, 2^m + 2^(m-1)) for some m >= 1; equivalently,
    for n >= 2, when n is below one and a half times its leading power of
    two.  The first values are 1, 1, -1, 1, 1, 1, -1, ...
    """
    if i < 1:
        raise ValueError(f"position must be >= 1, got {i}")
    if i % 2 == 0:
        return 1
    n = (i + 1) // 2
    if n < 2:
        return 1
    m = n.bit_length() - 1
    return -1 if n < 3 * (1 << (m - 1)) else 1


def epsilon_values(n: int) -> list[int]:
    """The sequence epsilon(1), ..., epsilon(n)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return [epsilon(i) for i in range(1, n + 1)]


def check_epsilon_products(nmax: int) -> Verdict:
    """Verify epsilon(1)*...*epsilon(2n+1) = -epsilon(n) for 1 <= n <= nmax.

    This prefix-product rule is what makes the `method_c` images square back
    to the generators.  The product is maintained incrementally, so the sweep
    is linear in nmax.
    """
    if nmax < 1:
        raise ValueError(f"need nmax >= 1, got {nmax}")
    prod = epsilon(1) * epsilon(2) * epsilon(3)
    for n in range(1, nmax + 1):
        if prod != -epsilon(n):
            return Verdict(
                "epsilon-product", nmax, COUNTEREXAMPLE,
                {"n": n, "prefixProduct": prod, "expected": -epsilon(n)},
            )
        prod *= epsilon(2 * n + 2) * epsilon(2 * n + 3)
    return Verdict("epsilon-product", nmax, HOLDS)


# ---------------------------------------------------------------------------
# homogeneous sign assignments


_VARIANTS = ("k", "kstar", "infty", "canonical", "trivial")


@dataclass(frozen=True)
class HomogeneousKind:
    """A 0/1 degree assignment on generator indices.

    variant "k": degree 0 for i <= k, 1 beyond (k = 0 is "canonical");
    variant "kstar": degree 1 for i <= k, 0 beyond (k = 0 is "trivial");
    variant "infty": degree 0 exactly on even indices.
    """

    variant: str
    k: int = 0

    def __post_init__(self):
        if self.variant not in _VARIANTS:
            raise ConstructionError(
                f"unknown homogeneous variant {self.variant!r}, expected one of {_VARIANTS}"
            )
        if self.k < 0:
            raise ConstructionError(f"k must be >= 0, got {self.k}")

    def degree(self, i: int) -> int:
        if self.variant == "k":
            return 0 if i <= self.k else 1
        if self.variant == "kstar":
            return 1 if i <= self.k else 0
        if self.variant == "infty":
            return 0 if i % 2 == 0 else 1
        if self.variant == "canonical":
            return 1
        return 0


def homogeneous(kind: HomogeneousKind) -> AutomorphismSpec:
    """The involution negating exactly the degree-1 generators of ``kind``.

    Signed generators anticommute and square back to themselves, so the spec
    is structurally certified.
    """
    if kind.variant == "k":
        rule = SignRule(-1, -1, tuple((i, 1) for i in range(1, kind.k + 1)))
    elif kind.variant == "kstar":
        rule = SignRule(1, 1, tuple((i, -1) for i in range(1, kind.k + 1)))
    elif kind.variant == "infty":
        rule = SignRule(odd_sign=-1, even_sign=1)
    elif kind.variant == "canonical":
        rule = SignRule(-1, -1)
    else:
        rule = SignRule(1, 1)
    note = "every generator maps to a signed copy of itself"
    return AutomorphismSpec(rule, Certificate(STRUCTURAL, note=note))


# ---------------------------------------------------------------------------
# cofinite signed region with finite perturbations


@dataclass(frozen=True)
class IndexSet:
    """A finite or cofinite set of generator indices.

    For a finite set, ``indices`` lists the members; for a cofinite set it
    lists the complement.
    """

    indices: tuple[int, ...]
    cofinite: bool = False

    def __post_init__(self):
        cleaned = tuple(sorted(set(self.indices)))
        for i in cleaned:
            if i < 1:
                raise ConstructionError(f"index must be >= 1, got {i}")
        object.__setattr__(self, "indices", cleaned)

    @classmethod
    def of(cls, indices) -> "IndexSet":
        return cls(tuple(indices), cofinite=False)

    @classmethod
    def all_but(cls, excluded) -> "IndexSet":
        return cls(tuple(excluded), cofinite=True)

    def __contains__(self, i: int) -> bool:
        return (i in self.indices) != self.cofinite

    def describe(self):
        if self.cofinite:
            return {"cofinite": list(self.indices)}
        return list(self.indices)


@dataclass(frozen=True)
class MethodAData:
    """Parameters: disjoint signed sets whose union is cofinite, and a
    perturbation d_j for every leftover index j."""

    iplus: IndexSet
    iminus: IndexSet
    d: tuple[tuple[int, Element], ...] = ()

    def __post_init__(self):
        if isinstance(self.d, Mapping):
            object.__setattr__(self, "d", tuple(sorted(self.d.items())))
        else:
            object.__setattr__(self, "d", tuple(sorted(dict(self.d).items())))

    def d_map(self) -> dict[int, Element]:
        return dict(self.d)


def _leftover_indices(iplus: IndexSet, iminus: IndexSet) -> set[int]:
    """The complement of iplus | iminus, raising unless it is finite and the
    two sets are disjoint."""
    if iplus.cofinite and iminus.cofinite:
        raise PartitionError("the two signed sets cannot both be cofinite; they would overlap")
    if not iplus.cofinite and not iminus.cofinite:
        raise PartitionError(
            "the signed sets are both finite, so they miss infinitely many indices"
        )
    if iplus.cofinite:
        cof, fin = iplus, iminus
    else:
        cof, fin = iminus, iplus
    excluded = set(cof.indices)
    members = set(fin.indices)
    if not members <= excluded:
        overlap = sorted(members - excluded)
        raise PartitionError(f"signed sets overlap at {overlap}")
    return excluded - members


def method_a(data: MethodAData) -> AutomorphismSpec:
    """Signs on a cofinite region, perturbed images -e_j + d_j elsewhere.

    Each d_j must satisfy three requirements: (1) it is parity-odd, so all
    images anticommute; (2) its monomials only use signed indices, so the map
    fixes or negates each factor; (3) each monomial contains an even number
    of negated factors, so d_j is fixed as a whole and the image of e_j
    squares back.  Violations raise `PerturbationError` carrying the
    requirement number; a malformed index split raises `PartitionError`.
    """
    leftover = _leftover_indices(data.iplus, data.iminus)
    if not leftover:
        raise PartitionError("the signed sets cover every index; nothing is left to perturb")
    keys = {j for j, _ in data.d}
    if keys != leftover:
        raise PartitionError(
            f"perturbed indices {sorted(keys)} do not match the unsigned leftovers {sorted(leftover)}"
        )
    for j, d in data.d:
        even, _ = d.parity_split()
        if not even.is_zero():
            raise PerturbationError(j, 1, f"must be parity-odd, has even part {even}")
        for mono, _coeff in d.terms():
            bad = [idx for idx in mono if idx in leftover]
            if bad:
                raise PerturbationError(
                    j, 2, f"monomial {Element.monomial(mono)} uses unsigned indices {bad}"
                )
            negated = sum(1 for idx in mono if idx in data.iminus)
            if negated % 2:
                raise PerturbationError(
                    j, 3,
                    f"monomial {Element.monomial(mono)} has {negated} negated factors, need an even count",
                )
    if data.iplus.cofinite:
        base = SignRule(1, 1, tuple((i, -1) for i in data.iminus.indices))
    else:
        base = SignRule(-1, -1, tuple((i, 1) for i in data.iplus.indices))
    rule = PerturbedSignRule(base, data.d)
    note = (
        "images are parity-odd so they anticommute; every perturbation is "
        "fixed pointwise, hence the map squares to the identity"
    )
    return AutomorphismSpec(rule, Certificate(STRUCTURAL, note=note))


# ---------------------------------------------------------------------------
# signed head with a uniformly perturbed tail


@dataclass(frozen=True)
class MethodBData:
    """Parameters: head width k (kept fixed), negated block width t (odd),
    default tail scalar lam with optional per-index overrides."""

    k: int
    t: int
    lam: Fraction = Fraction(1)
    overrides: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if isinstance(self.overrides, Mapping):
            items = self.overrides.items()
        else:
            items = dict(self.overrides).items()
        object.__setattr__(
            self, "overrides", tuple(sorted((n, Fraction(c)) for n, c in items))
        )

    def coeff_at(self, n: int) -> Fraction:
        for idx, c in self.overrides:
            if idx == n:
                return c
        return self.lam


def method_b(data: MethodBData) -> AutomorphismSpec:
    """Fix e_1..e_k, negate the next t generators, and map every later e_n to
    -e_n + c_n * e_1 ... e_{k+t} * e_n.

    The width t must be odd: the image of the prefix monomial then picks up
    a net minus sign, which is what cancels the tail perturbation on the
    second application.  Tail scalars must be nonzero.  One subtlety: when k
    is even the prefix has odd length and distinct tail scalars leave the
    residual (c_m - c_n) * prefix * e_n * e_m in the anticommutation sums, so
    that combination is rejected as well.
    """
    if data.k < 0:
        raise TailParameterError("bad_k", f"head width must be >= 0, got {data.k}")
    if data.t < 1 or data.t % 2 == 0:
        raise TailParameterError(
            "even_t", f"negated block width must be odd and positive, got {data.t}"
        )
    if data.lam == 0:
        raise TailParameterError("zero_lambda", "tail scalar must be nonzero")
    width = data.k + data.t
    for n, c in data.overrides:
        if c == 0:
            raise TailParameterError("zero_lambda", f"tail scalar for e{n} must be nonzero")
        if n <= width:
            raise TailParameterError(
                "override_in_head", f"override index {n} lies inside the signed head"
            )
    if data.k % 2 == 0 and any(c != data.lam for _, c in data.overrides):
        raise TailParameterError(
            "mixed_lambda",
            "with an even head the prefix has odd length and unequal tail "
            "scalars break anticommutation of the tail images",
        )
    rule = TailRule(
        head_signs=(1,) * data.k + (-1,) * data.t,
        prefix=tuple(range(1, width + 1)),
        tail_coeff=data.lam,
        tail_sign=-1,
        overrides=data.overrides,
    )
    note = (
        "double application returns each generator in closed form; the tail "
        "images anticommute because they are parity-odd or share one scalar"
    )
    return AutomorphismSpec(rule, Certificate(STRUCTURAL, note=note))


# ---------------------------------------------------------------------------
# the epsilon-weighted family with independent tails


@dataclass(frozen=True)
class EpsilonRule(GeneratorRule):
    """e_i maps to epsilon(i) * e_i + e_1 e_2 ... e_{2i+1}."""

    def image(self, i: int) -> Element:
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        return Element(
            {(i,): Fraction(epsilon(i)), tuple(range(1, 2 * i + 2)): Fraction(1)}
        )

    def describe(self) -> dict:
        return {"rule": "epsilon-tail"}


def method_c() -> AutomorphismSpec:
    """The involution e_i -> epsilon(i) e_i + w_i with w_i = e1 ... e_{2i+1}.

    All images are parity-odd, so they anticommute.  Applying the map to w_i
    multiplies it by the prefix product epsilon(1)...epsilon(2i+1), which the
    product rule evaluates to -epsilon(i); the cross terms vanish because any
    two tails share the factor e1.  Hence the double application returns e_i
    exactly.
    """
    note = (
        "parity-odd images; the prefix-product rule for the sign sequence "
        "makes each tail flip sign, cancelling the cross term"
    )
    return AutomorphismSpec(EpsilonRule(), Certificate(STRUCTURAL, note=note))
