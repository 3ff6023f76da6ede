"""Exact arithmetic for linear codes over F_p and over F_p + vF_p with v*v = v.

The ring F_p + vF_p is isomorphic to F_p x F_p through evaluation at
v = 0 and v = 1, and every code over it is determined by the pair of
field codes those evaluations cut out.  This package builds codes from
generator matrices, decomposes them into their component pair, computes
duals and standard forms exactly, and constructs self-dual codes from
self-dual field components.
"""

from .construct import (
    PAIR_BUDGET,
    ConstructionReport,
    CountReport,
    build_self_dual,
    build_self_dual_report,
    construct_from_pair,
    count_self_dual_r,
    count_self_dual_r_report,
    exists_self_dual,
    exists_self_dual_r,
)
from .fpcodes import (
    CODEWORD_BUDGET,
    SUBSPACE_BUDGET,
    BudgetExceeded,
    FpLinearCode,
    all_subspaces,
    census_self_dual_fp,
    code_from_generator,
    dual_fp,
    enumerate_codewords,
    exists_self_dual_fp,
    gaussian_binomial,
    is_self_dual_fp,
    is_self_orthogonal_fp,
    seed_self_dual,
)
from .linalg import FpMatrix, Permutation, RMatrix
from .primefield import FpScalar, ModulusMismatch, PrimeModulus, sqrt_of_minus_one
from .rcodes import (
    RLinearCode,
    StandardForm,
    TypeTriple,
    check_type_condition,
    components,
    dual_r,
    dual_words_bruteforce,
    gray_image,
    is_self_dual_r,
    is_self_orthogonal_r,
    parity_check,
    rcode_from_generator,
    rcode_word_array,
    span_closure_words,
    standard_form,
    torsion_codes_oracle,
)
from .ring import RScalar, crt_assemble, parse_scalar_token, render_scalar_token

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CODEWORD_BUDGET",
    "ConstructionReport",
    "CountReport",
    "FpLinearCode",
    "FpMatrix",
    "FpScalar",
    "ModulusMismatch",
    "PAIR_BUDGET",
    "Permutation",
    "PrimeModulus",
    "RLinearCode",
    "RMatrix",
    "RScalar",
    "SUBSPACE_BUDGET",
    "StandardForm",
    "TypeTriple",
    "all_subspaces",
    "build_self_dual",
    "build_self_dual_report",
    "census_self_dual_fp",
    "check_type_condition",
    "code_from_generator",
    "components",
    "construct_from_pair",
    "count_self_dual_r",
    "count_self_dual_r_report",
    "crt_assemble",
    "dual_fp",
    "dual_r",
    "dual_words_bruteforce",
    "enumerate_codewords",
    "exists_self_dual",
    "exists_self_dual_fp",
    "exists_self_dual_r",
    "gaussian_binomial",
    "gray_image",
    "is_self_dual_fp",
    "is_self_dual_r",
    "is_self_orthogonal_fp",
    "is_self_orthogonal_r",
    "parity_check",
    "parse_scalar_token",
    "rcode_from_generator",
    "rcode_word_array",
    "render_scalar_token",
    "seed_self_dual",
    "span_closure_words",
    "sqrt_of_minus_one",
    "standard_form",
    "torsion_codes_oracle",
    "__version__",
]
