"""Cross-validation battery.

Each check pits two independently implemented quantities against each other
in exact arithmetic, so every comparison is at zero tolerance:

* the equivariant series specialized at p_1 = 1, p_k = 0 against the
  non-equivariant closed form, and that closed form against the piecewise
  integer formula;
* the integer formula against Bini's long and compact double-sum formulas,
  and the double sum against its factorial-ratio closed form;
* the assembled series against the residue-class tables for the low-degree
  mixed coefficients, and its constant term against 1;
* the totient divisor-sum identities;
* Schur expansions against integrality and the dimension count;
* the polynomial algebra against a naive expansion oracle, the character
  table against the orthogonality relations, and the power-sum/Schur
  conversions against each other.

The functions are pure and parameterized by their ranges; the command-line
``verify`` subcommand and the test suite both drive them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bini_oracle import (
    bini_chi_compact,
    bini_chi_long,
    bini_double_sum,
    bini_double_sum_closed_form,
)
from .exact_arith import verify_phi_identities
from .hyperelliptic_core import (
    chi_pointed,
    equivariant_series,
    low_degree_coefficient,
    nonequivariant_series,
    symmetry_classes,
)
from .schur_transform import (
    SchurVector,
    centralizer_order,
    mn_character,
    p_to_schur,
    partitions_of,
    schur_dimension_sum,
    schur_to_p,
)
from .symfunc_series import (
    PSMonomial,
    PSPolynomial,
    binomial_factor,
    ps_mul,
    series_mul,
    specialize_p1,
    TSeries,
)

__all__ = ["CheckResult", "run_battery"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_specialization(g_lo: int, g_hi: int, order: int | None = None) -> CheckResult:
    """Series at p_1 = 1, p_k = 0 equals the non-equivariant closed form."""
    for g in range(g_lo, g_hi + 1):
        n_max = order if order is not None else 2 * g + 4
        got = specialize_p1(equivariant_series(g, n_max))
        want = nonequivariant_series(g, n_max)
        if got != want:
            return CheckResult(
                "specialization",
                False,
                f"mismatch at g={g}: {got} != {want}",
            )
    depth = str(order) if order is not None else "2g+4"
    return CheckResult(
        "specialization", True, f"g={g_lo}..{g_hi}, degrees 0..{depth}"
    )


def check_closed_forms(g_lo: int, g_hi: int, order: int | None = None) -> CheckResult:
    """n! times the series coefficient equals the piecewise integer formula."""
    for g in range(g_lo, g_hi + 1):
        n_max = order if order is not None else 2 * g + 6
        series = nonequivariant_series(g, n_max)
        pinned = [1, 2, 2, 0, -2 * g, 0]
        for n in range(n_max + 1):
            chi = chi_pointed(g, n)
            if factorial(n) * series[n] != chi:
                return CheckResult(
                    "closed-forms", False, f"mismatch at g={g}, n={n}"
                )
            if n < 6 and chi != pinned[n]:
                return CheckResult(
                    "closed-forms",
                    False,
                    f"pinned value broken at g={g}, n={n}: {chi}",
                )
    depth = str(order) if order is not None else "2g+6"
    return CheckResult(
        "closed-forms", True, f"g={g_lo}..{g_hi}, n=0..{depth}"
    )


def check_bini_agreement(g_lo: int, g_hi: int) -> CheckResult:
    """Long form = compact form = integer formula on 5 <= n <= 2g+2."""
    for g in range(g_lo, g_hi + 1):
        for n in range(5, 2 * g + 3):
            compact = bini_chi_compact(g, n)
            long_form = bini_chi_long(g, n)
            chi = chi_pointed(g, n)
            if not (compact == long_form == chi):
                return CheckResult(
                    "bini-oracle",
                    False,
                    f"g={g}, n={n}: compact={compact}, long={long_form}, chi={chi}",
                )
            if compact.denominator != 1:
                return CheckResult(
                    "bini-oracle", False, f"non-integer value at g={g}, n={n}"
                )
    return CheckResult("bini-oracle", True, f"g={g_lo}..{g_hi}, n=5..2g+2")


def check_double_sum_identity(g_lo: int, g_hi: int, depth: int) -> CheckResult:
    """The signed double sum equals its factorial-ratio closed form."""
    for g in range(g_lo, g_hi + 1):
        for n in range(depth + 1):
            if bini_double_sum(g, n) != bini_double_sum_closed_form(g, n):
                return CheckResult(
                    "double-sum-identity", False, f"mismatch at g={g}, n={n}"
                )
    return CheckResult(
        "double-sum-identity", True, f"g={g_lo}..{g_hi}, n=0..{depth}"
    )


_LOW_DEGREE_MONOMIALS = tuple(
    PSMonomial(exps)
    for exps in [
        ((2, 1),),
        ((1, 1), (2, 1)),
        ((1, 2), (2, 1)),
        ((2, 2),),
        ((3, 1),),
        ((1, 1), (3, 1)),
        ((4, 1),),
    ]
)


def check_low_degree_tables(g_lo: int, g_hi: int) -> CheckResult:
    """Series coefficients up to t^4 match the residue-class closed forms."""
    p2 = PSMonomial(((2, 1),))
    p4 = PSMonomial(((4, 1),))
    p2_by_parity = (Fraction(0), Fraction(1))
    p4_by_residue = (Fraction(0), Fraction(-1, 2), Fraction(1, 2), Fraction(0))
    for g in range(g_lo, g_hi + 1):
        series = equivariant_series(g, 4)
        for mono in _LOW_DEGREE_MONOMIALS:
            got = series.coeffs[mono.weight].coefficient(mono)
            want = low_degree_coefficient(g, mono)
            if got != want:
                return CheckResult(
                    "low-degree-tables",
                    False,
                    f"g={g}, {mono}: series gives {got}, closed form {want}",
                )
        if low_degree_coefficient(g, p2) != p2_by_parity[g % 2]:
            return CheckResult(
                "low-degree-tables", False, f"p2 residue value broken at g={g}"
            )
        if low_degree_coefficient(g, p4) != p4_by_residue[g % 4]:
            return CheckResult(
                "low-degree-tables", False, f"p4 residue value broken at g={g}"
            )
    return CheckResult("low-degree-tables", True, f"g={g_lo}..{g_hi}")


def check_constant_term(g_lo: int, g_hi: int) -> CheckResult:
    """The t^0 coefficient of the series is 1 for every genus."""
    for g in range(g_lo, g_hi + 1):
        if sum(t.coefficient for t in symmetry_classes(g)) != 1:
            return CheckResult(
                "constant-term", False, f"class weights sum != 1 at g={g}"
            )
        if equivariant_series(g, 0).coeffs[0] != PSPolynomial.one():
            return CheckResult(
                "constant-term", False, f"t^0 coefficient != 1 at g={g}"
            )
    return CheckResult("constant-term", True, f"g={g_lo}..{g_hi}")


def check_totient_identities(limit: int) -> CheckResult:
    """Divisor sums of the totient behave on 1..limit."""
    for n in range(1, limit + 1):
        if not verify_phi_identities(n):
            return CheckResult("totient-identities", False, f"fails at n={n}")
    return CheckResult("totient-identities", True, f"n=1..{limit}")


def check_schur_integrality(g_lo: int, g_hi: int, n_max: int) -> CheckResult:
    """Schur coefficients are integers and weight the dimensions to chi."""
    for g in range(g_lo, g_hi + 1):
        series = equivariant_series(g, n_max)
        for n in range(n_max + 1):
            vec = p_to_schur(series.coeffs[n], n)
            if not vec.is_integer_valued():
                return CheckResult(
                    "schur-integrality",
                    False,
                    f"non-integer multiplicity at g={g}, n={n}",
                )
            if schur_dimension_sum(vec) != chi_pointed(g, n):
                return CheckResult(
                    "schur-integrality",
                    False,
                    f"dimension sum mismatch at g={g}, n={n}",
                )
    return CheckResult(
        "schur-integrality", True, f"g={g_lo}..{g_hi}, n=0..{n_max}"
    )


def _naive_mul(a: PSPolynomial, b: PSPolynomial) -> PSPolynomial:
    # Independent product oracle: monomials as flat sorted tuples of
    # generator indices with multiplicity, merged by concatenation.
    def flatten(mono: PSMonomial) -> tuple[int, ...]:
        out: list[int] = []
        for k, e in mono.exps:
            out.extend([k] * e)
        return tuple(sorted(out))

    def unflatten(flat: tuple[int, ...]) -> PSMonomial:
        exps: dict[int, int] = {}
        for k in flat:
            exps[k] = exps.get(k, 0) + 1
        return PSMonomial(sorted(exps.items()))

    acc: dict[tuple[int, ...], Fraction] = {}
    for ma, ca in a.terms.items():
        fa = flatten(ma)
        for mb, cb in b.terms.items():
            key = tuple(sorted(fa + flatten(mb)))
            acc[key] = acc.get(key, Fraction(0)) + ca * cb
    return PSPolynomial({unflatten(k): v for k, v in acc.items() if v})


def _random_poly(rng: random.Random) -> PSPolynomial:
    terms: dict[PSMonomial, Fraction] = {}
    for _ in range(rng.randint(0, 3)):
        exps = {}
        for _ in range(rng.randint(1, 2)):
            exps[rng.randint(1, 3)] = rng.randint(1, 3)
        mono = PSMonomial(sorted(exps.items()))
        terms[mono] = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
    return PSPolynomial(terms)


def check_algebra(seed: int = 7, samples: int = 150) -> CheckResult:
    """Algebraic self-consistency of the symmetric-function layer."""
    cap = 80
    # Inverse binomial pairs: (1+p_k t^k)^m (1+p_k t^k)^(-m) = 1.
    for k in range(1, 5):
        for m in range(-12, 13):
            for order in (0, 7, 16):
                prod = series_mul(
                    binomial_factor(k, m, order),
                    binomial_factor(k, -m, order),
                )
                if prod != TSeries.one(order):
                    return CheckResult(
                        "algebra",
                        False,
                        f"binomial inverse pair fails: k={k}, m={m}, N={order}",
                    )
    # Ring axioms against the naive oracle.
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = (_random_poly(rng) for _ in range(3))
        if ps_mul(a, b, cap) != _naive_mul(a, b):
            return CheckResult("algebra", False, f"product oracle mismatch: {a} * {b}")
        if ps_mul(a, b, cap) != ps_mul(b, a, cap):
            return CheckResult("algebra", False, "commutativity fails")
        if ps_mul(ps_mul(a, b, cap), c, cap) != ps_mul(a, ps_mul(b, c, cap), cap):
            return CheckResult("algebra", False, "associativity fails")
        if ps_mul(a + b, c, cap) != ps_mul(a, c, cap) + ps_mul(b, c, cap):
            return CheckResult("algebra", False, "distributivity fails")
    # Character orthogonality: sum_lam chi(mu) chi(nu) = z_mu [mu == nu].
    for n in range(9):
        parts = partitions_of(n)
        for mu in parts:
            for nu in parts:
                total = sum(
                    mn_character(lam, mu) * mn_character(lam, nu)
                    for lam in parts
                )
                want = centralizer_order(mu) if mu == nu else 0
                if total != want:
                    return CheckResult(
                        "algebra",
                        False,
                        f"orthogonality fails at n={n}, mu={mu}, nu={nu}",
                    )
    # Power-sum <-> Schur round trip on basis vectors.
    for n in range(8):
        for lam in partitions_of(n):
            unit = SchurVector(n, {lam: Fraction(1)})
            back = p_to_schur(schur_to_p(unit), n)
            if back != unit:
                return CheckResult(
                    "algebra", False, f"round trip fails at {lam}"
                )
    return CheckResult(
        "algebra",
        True,
        f"inverse pairs, ring axioms ({samples} samples), "
        "orthogonality n<=8, round trip n<=7",
    )


def check_basis_roundtrip(g_lo: int, g_hi: int, n_max: int) -> CheckResult:
    """Schur output converts back to the power-sum coefficients exactly."""
    for g in range(g_lo, g_hi + 1):
        series = equivariant_series(g, n_max)
        for n in range(n_max + 1):
            poly = series.coeffs[n]
            if schur_to_p(p_to_schur(poly, n)) != poly:
                return CheckResult(
                    "basis-roundtrip", False, f"mismatch at g={g}, n={n}"
                )
    return CheckResult(
        "basis-roundtrip", True, f"g={g_lo}..{g_hi}, n=0..{n_max}"
    )


def run_battery(
    g_lo: int,
    g_hi: int,
    max_points: int,
    double_sum_depth: int = 30,
    totient_limit: int = 10_000,
    roundtrip: bool = False,
) -> list[CheckResult]:
    """Run every check over the given genus range and point depth."""
    if g_lo < 2:
        raise ValueError(f"genus must be >= 2, got {g_lo}")
    if g_hi < g_lo:
        raise ValueError(f"empty genus range {g_lo}..{g_hi}")
    if max_points < 0:
        raise ValueError(f"max points must be >= 0, got {max_points}")
    results = [
        check_specialization(g_lo, g_hi, max_points),
        check_closed_forms(g_lo, g_hi, max_points),
        check_bini_agreement(g_lo, g_hi),
        check_double_sum_identity(g_lo, g_hi, double_sum_depth),
        check_low_degree_tables(g_lo, g_hi),
        check_constant_term(g_lo, g_hi),
        check_totient_identities(totient_limit),
        check_schur_integrality(g_lo, g_hi, min(max_points, 10)),
        check_algebra(),
    ]
    if roundtrip:
        results.append(
            check_basis_roundtrip(g_lo, g_hi, min(max_points, 10))
        )
    return results
