"""Exact computation of gauge invariants of finite-dimensional Hopf
algebras: antipode-power traces, regular-representation indicators,
Drinfeld twists and twisted algebras, the Chevalley property, and finite
pivotalizations, all over cyclotomic fields with no floating point."""

from .cyclotomic import CycNum, ParseError, cyc_format, cyc_parse, euler_phi
from .linalg import (
    AffineSolution,
    Mat,
    SingularMatrixError,
    Tensor3,
    inverse,
    is_nilpotent,
    kron,
    nullspace,
    solve,
)
from .hopf import (
    AxiomReport,
    HopfAlgebra,
    InvariantTable,
    antipode_power,
    convolution_power,
    dual_hopf,
    kmn_indicator,
    ord_antipode,
    trace_antipode_power,
    verify_hopf,
)
from .structure import (
    ChevalleyResult,
    IntegralPair,
    RadicalData,
    integral_identity_check,
    integrals,
    invariant_table,
    is_chevalley,
    jacobson_radical,
    nilpotent_composite_check,
    radford_trace,
)
from .twist import (
    BetaFixedResult,
    InvarianceReport,
    RegularObjectResult,
    Twist,
    TwistedPair,
    TwistValidationError,
    beta_fixed_check,
    gamma_coproduct_check,
    gamma_power,
    gamma_unity_check,
    grouplike_check,
    identity_twist,
    invariance_report,
    regular_object_test,
    twist_hopf,
    validate_twist,
)
from . import zoo

__all__ = [
    "AffineSolution",
    "AxiomReport",
    "BetaFixedResult",
    "ChevalleyResult",
    "CycNum",
    "HopfAlgebra",
    "IntegralPair",
    "InvarianceReport",
    "InvariantTable",
    "Mat",
    "ParseError",
    "RadicalData",
    "RegularObjectResult",
    "SingularMatrixError",
    "Tensor3",
    "Twist",
    "TwistValidationError",
    "TwistedPair",
    "antipode_power",
    "beta_fixed_check",
    "convolution_power",
    "cyc_format",
    "cyc_parse",
    "dual_hopf",
    "euler_phi",
    "gamma_coproduct_check",
    "gamma_power",
    "gamma_unity_check",
    "grouplike_check",
    "identity_twist",
    "integral_identity_check",
    "integrals",
    "invariance_report",
    "invariant_table",
    "inverse",
    "is_chevalley",
    "is_nilpotent",
    "jacobson_radical",
    "kmn_indicator",
    "kron",
    "nilpotent_composite_check",
    "nullspace",
    "ord_antipode",
    "radford_trace",
    "regular_object_test",
    "solve",
    "trace_antipode_power",
    "twist_hopf",
    "validate_twist",
    "verify_hopf",
    "zoo",
]
