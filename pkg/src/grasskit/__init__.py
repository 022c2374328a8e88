"""grasskit: exact exterior-algebra arithmetic and an order-2 automorphism
workbench.

The pieces: `algebra` is the sparse rational kernel; `automorphisms` turns
generator rules into bounded-verified maps; `constructions` holds the
ready-made involution families; `gradings` classifies the induced splits and
evaluates graded polynomial identities; `specfiles` and `cli` are the JSON
and command-line surfaces.
"""

from .algebra import (
    Element,
    ElementParseError,
    Monomial,
    as_monomial,
    mono_mul,
    monomial_key,
    parse_element,
    render_element,
)
from .automorphisms import (
    AnticommutationError,
    AutomorphismSpec,
    Certificate,
    ComposedRule,
    CustomFinite,
    GeneratorRule,
    InvolutionError,
    PerturbedSignRule,
    SignRule,
    TailRule,
    Verdict,
    VerificationError,
    apply_rule,
    certify,
    check_anticommute,
    check_involution,
    compose,
    image_of_generator,
    is_canonical_type,
    require_involutive,
)
from .constructions import (
    ConstructionError,
    EpsilonRule,
    HomogeneousKind,
    IndexSet,
    MethodAData,
    MethodBData,
    PartitionError,
    PerturbationError,
    TailParameterError,
    check_epsilon_products,
    epsilon,
    epsilon_values,
    homogeneous,
    method_a,
    method_b,
    method_c,
)
from .freealg import (
    GradedPolyParseError,
    GradedPolynomial,
    GradedVariable,
    commutator,
    parse_graded_poly,
    yvar,
    zvar,
)
from .gradings import (
    DegreeMismatch,
    TypeReport,
    classify,
    eval_graded_poly,
    falsify_identity,
    falsify_identity_exhaustive,
    fixed_line_kernel,
)
from .specfiles import SpecFileError, load_spec, spec_from_obj

__version__ = "0.1.0"

__all__ = [
    "Element",
    "ElementParseError",
    "Monomial",
    "as_monomial",
    "mono_mul",
    "monomial_key",
    "parse_element",
    "render_element",
    "AnticommutationError",
    "AutomorphismSpec",
    "Certificate",
    "ComposedRule",
    "CustomFinite",
    "GeneratorRule",
    "InvolutionError",
    "PerturbedSignRule",
    "SignRule",
    "TailRule",
    "Verdict",
    "VerificationError",
    "apply_rule",
    "certify",
    "check_anticommute",
    "check_involution",
    "compose",
    "image_of_generator",
    "is_canonical_type",
    "require_involutive",
    "ConstructionError",
    "EpsilonRule",
    "HomogeneousKind",
    "IndexSet",
    "MethodAData",
    "MethodBData",
    "PartitionError",
    "PerturbationError",
    "TailParameterError",
    "check_epsilon_products",
    "epsilon",
    "epsilon_values",
    "homogeneous",
    "method_a",
    "method_b",
    "method_c",
    "GradedPolyParseError",
    "GradedPolynomial",
    "GradedVariable",
    "commutator",
    "parse_graded_poly",
    "yvar",
    "zvar",
    "DegreeMismatch",
    "TypeReport",
    "classify",
    "eval_graded_poly",
    "falsify_identity",
    "falsify_identity_exhaustive",
    "fixed_line_kernel",
    "SpecFileError",
    "load_spec",
    "spec_from_obj",
    "__version__",
]
