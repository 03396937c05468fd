"""hurwitzlab: exact and certified-precision computations with Hurwitz zeta
values over cyclotomic fields.

Exact side: Bernoulli numbers and polynomials, cyclotomic field arithmetic
with the Galois action, the normalized pair combinations of Hurwitz zeta
values as explicit cyclotomic numbers, and exact ranks over abelian number
fields.  Numeric side: Euler-Maclaurin evaluation with certified error
bounds, L(1, chi), and PSLQ integer-relation probes with exclusion
certificates.
"""

__version__ = "0.1.0"

from .errors import (
    ComputationError,
    DegenerateSumError,
    InconsistentAError,
    PrecisionInsufficientError,
)
from .exact import (
    Rational,
    bernoulli_number,
    bernoulli_poly_eval,
    rational_from_str,
    rational_to_str,
    zeta_even_over_pi_power,
)
from .precision import PrecisionComplex, PrecisionContext, PrecisionReal
from .cyclotomic import (
    AbelianFieldDesc,
    CyclotomicElement,
    DirichletCharacter,
    UnitGroupStruct,
    change_modulus,
    cyclo_arith,
    cyclotomic_polynomial,
    dirichlet_characters,
    embed_complex,
    euler_phi,
    exact_rank,
    galois_apply,
    is_rational_intersection,
    relative_rank,
    subfield_intersection,
    unit_group,
)
from .hurwitz import (
    PeriodicFunction,
    digamma_rational,
    euler_gamma_const,
    hurwitz_zeta,
    l_one_chi,
    periodic_l_value,
    pi_const,
)
from .lambda_exact import (
    CotDerivRep,
    LambdaValue,
    bernoulli_sum_lambda,
    cot_derivative_rep,
    infer_A,
    lambda_exact,
    verify_strong_identity,
)
from .relations import PROBE_SET_NAMES, RelationReport, probe_set, pslq, verify_relation
from .spaces import (
    DimensionCertificate,
    MembershipVerdict,
    arithmetic_space_rank,
    certified_milnor_lower_bound,
    even_k_rational_sum,
    normalized_membership_verdict,
    s_space_lower_bound,
)

__all__ = [
    "__version__",
    "ComputationError",
    "PrecisionInsufficientError",
    "InconsistentAError",
    "DegenerateSumError",
    "Rational",
    "bernoulli_number",
    "bernoulli_poly_eval",
    "zeta_even_over_pi_power",
    "rational_to_str",
    "rational_from_str",
    "PrecisionContext",
    "PrecisionReal",
    "PrecisionComplex",
    "CyclotomicElement",
    "UnitGroupStruct",
    "AbelianFieldDesc",
    "DirichletCharacter",
    "euler_phi",
    "unit_group",
    "cyclotomic_polynomial",
    "cyclo_arith",
    "change_modulus",
    "galois_apply",
    "embed_complex",
    "subfield_intersection",
    "is_rational_intersection",
    "relative_rank",
    "dirichlet_characters",
    "exact_rank",
    "PeriodicFunction",
    "hurwitz_zeta",
    "pi_const",
    "euler_gamma_const",
    "digamma_rational",
    "periodic_l_value",
    "l_one_chi",
    "CotDerivRep",
    "LambdaValue",
    "cot_derivative_rep",
    "lambda_exact",
    "bernoulli_sum_lambda",
    "infer_A",
    "verify_strong_identity",
    "RelationReport",
    "PROBE_SET_NAMES",
    "pslq",
    "verify_relation",
    "probe_set",
    "DimensionCertificate",
    "MembershipVerdict",
    "arithmetic_space_rank",
    "certified_milnor_lower_bound",
    "even_k_rational_sum",
    "s_space_lower_bound",
    "normalized_membership_verdict",
]
