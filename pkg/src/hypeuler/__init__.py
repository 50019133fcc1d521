"""Exact equivariant Euler characteristics of pointed hyperelliptic moduli.

For a genus g >= 2 hyperelliptic curve with n ordered marked points, the
moduli space H_{g,n} carries an action of the symmetric group S_n, and its
Euler characteristic refines to a virtual S_n-character, encoded as a
symmetric function.  This package computes the generating function

    sum_n t^n chi^{S_n}(H_{g,n})

exactly, as a truncated series whose t^n coefficient is a weight-n
polynomial in the power sums p_k, converts coefficients to the Schur basis,
evaluates the non-equivariant specializations in several independent ways,
and cross-validates all of them at zero tolerance.  All arithmetic is exact
rational arithmetic; there is no floating point anywhere.

The ``hypeuler`` console script exposes the series, the integer Euler
characteristic table, and the verification battery.
"""

from .exact_arith import (
    Rational,
    divisors,
    euler_phi,
    gen_binomial,
    verify_phi_identities,
)
from .symfunc_series import (
    PSMonomial,
    PSPolynomial,
    TSeries,
    binomial_factor,
    linear_combine,
    product_of_factors,
    ps_mul,
    series_mul,
    specialize_p1,
)
from .schur_transform import (
    Partition,
    SchurVector,
    centralizer_order,
    mn_character,
    p_monomial_cycle_type,
    p_to_schur,
    partitions_of,
    schur_dimension_sum,
    schur_to_p,
    sign_twist,
)
from .hyperelliptic_core import (
    GenusParams,
    SymmetryClassTerm,
    chi_pointed,
    closed_form_coefficients,
    equivariant_schur,
    equivariant_series,
    low_degree_coefficient,
    nonequivariant_series,
    orbifold_euler_char,
    rotation_class_euler,
    symmetry_classes,
    unordered_config_euler,
)
from .bini_oracle import (
    bini_chi_compact,
    bini_chi_long,
    bini_double_sum,
    bini_double_sum_closed_form,
    ext_factorial,
)
from .verify import CheckResult, run_battery

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "euler_phi",
    "divisors",
    "gen_binomial",
    "verify_phi_identities",
    "PSMonomial",
    "PSPolynomial",
    "TSeries",
    "ps_mul",
    "series_mul",
    "binomial_factor",
    "product_of_factors",
    "linear_combine",
    "specialize_p1",
    "Partition",
    "SchurVector",
    "partitions_of",
    "mn_character",
    "p_monomial_cycle_type",
    "p_to_schur",
    "schur_to_p",
    "schur_dimension_sum",
    "centralizer_order",
    "sign_twist",
    "GenusParams",
    "SymmetryClassTerm",
    "orbifold_euler_char",
    "unordered_config_euler",
    "rotation_class_euler",
    "symmetry_classes",
    "equivariant_series",
    "equivariant_schur",
    "nonequivariant_series",
    "closed_form_coefficients",
    "chi_pointed",
    "low_degree_coefficient",
    "bini_chi_compact",
    "bini_chi_long",
    "bini_double_sum",
    "bini_double_sum_closed_form",
    "ext_factorial",
    "CheckResult",
    "run_battery",
]
