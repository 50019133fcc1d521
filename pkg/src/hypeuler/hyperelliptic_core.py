"""Generating functions for Euler characteristics of pointed hyperelliptic moduli.

For genus g >= 2 let H_{g,n} denote the moduli space of genus-g hyperelliptic
curves with n ordered marked points, carrying its S_n action.  This module
assembles two generating functions:

* the equivariant series sum_n t^n chi^{S_n}(H_{g,n}), whose t^n coefficient
  is a homogeneous weight-n polynomial in the power sums p_k, built as a
  finite sum of symmetry-class terms, each a rational weight times a product
  of factors (1 + p_k t^k)^m;

* the non-equivariant series sum_n t^n/n! chi(H_{g,n}), a closed form in
  powers of (1 + t), together with the piecewise factorial formula for the
  integer values chi(H_{g,n}).

Setting p_1 = 1 and p_k = 0 (k > 1) in the first series reproduces the
second exactly; the verification battery checks this identity, the residue
tables for the low-degree mixed coefficients, and agreement with an
independent double-sum formula (see :mod:`hypeuler.bini_oracle`).

Every finite-order automorphism of a hyperelliptic curve is either the
identity, the hyperelliptic involution, or lifts a rotation of the base
line fixing two points.  The classes are indexed by the order n of the
rotation, which of the 2g+2 branch points are fixed (one, none, or two --
equivalent to n dividing 2g+1, 2g+2, or 2g), and whether the lift to the
curve has order n or 2n.  Each class contributes a rational weight (an
orbifold Euler characteristic of a configuration space of branch points,
halved once for the involution and once more when the two rotation centers
cannot be told apart) times the cycle-index factor recording point orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact_arith import divisors, euler_phi, gen_binomial
from .schur_transform import SchurVector, p_to_schur
from .symfunc_series import (
    PSMonomial,
    TSeries,
    linear_combine,
    product_of_factors,
)

__all__ = [
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
]


@dataclass(frozen=True)
class GenusParams:
    """Validated genus of a hyperelliptic curve; g >= 2 throughout."""

    g: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")


@dataclass(frozen=True)
class SymmetryClassTerm:
    """One symmetry-class contribution to the equivariant series.

    ``factors`` lists (k, m) pairs for the product of (1 + p_k t^k)^m; the
    divisibility condition selecting ``order_n`` guarantees every m is an
    integer.  ``order_n`` is the rotation order on the base line, None for
    the identity and involution classes.
    """

    label: str
    coefficient: Fraction
    factors: tuple[tuple[int, int], ...]
    order_n: int | None = None


def orbifold_euler_char(g: int) -> Fraction:
    """Orbifold Euler characteristic of the unpointed moduli space H_g."""
    GenusParams(g)
    return Fraction(-1, 2 * 2 * g * (2 * g + 1) * (2 * g + 2))


def unordered_config_euler(k: int) -> Fraction:
    """Orbifold Euler characteristic of k unordered points on C* up to scaling.

    Equals (-1)^(1-k)/k: scaling one point to 1 leaves k-1 distinct points
    on the line minus two points, whose unordered configuration space has
    Euler characteristic (-1)^(k-1), and the normalized point can be chosen
    in k ways.
    """
    if k < 1:
        raise ValueError(f"point count must be >= 1, got {k}")
    return Fraction((-1) ** ((1 - k) % 2), k)


def rotation_class_euler(order_n: int, num_points: int) -> Fraction:
    """Class weight of order-n rotations on N-point configurations of C*.

    For n >= 2 dividing N this is (-1)^(1 - N/n) * phi(n)/N: an invariant
    configuration is assembled from q = N/n full rotation orbits, so taking
    n-th powers of the coordinates reduces each of the phi(n) primitive
    rotations to a q-point configuration weighted by 1/n for the covering.
    """
    if order_n < 2:
        raise ValueError(f"rotation order must be >= 2, got {order_n}")
    if num_points < 1 or num_points % order_n != 0:
        raise ValueError(
            f"rotation order {order_n} must divide the point count {num_points}"
        )
    q = num_points // order_n
    per_rotation = unordered_config_euler(q) * Fraction(q, num_points)
    return euler_phi(order_n) * per_rotation


def symmetry_classes(g: int) -> list[SymmetryClassTerm]:
    """The full symmetry-class table for genus g.

    One entry per cycle-index monomial; brackets contributing two monomials
    with a shared weight yield two entries with equal coefficients.  The
    coefficients over the whole table sum to 1, which is exactly the
    statement that the unpointed moduli space has Euler characteristic 1.
    """
    GenusParams(g)
    e0 = orbifold_euler_char(g)
    terms = [
        SymmetryClassTerm("identity", e0, ((1, 2 - 2 * g),)),
        SymmetryClassTerm("involution", e0, ((1, 2 + 2 * g), (2, -2 * g))),
    ]

    # One branch point fixed: n odd, n | 2g+1, and 2g+1 free branch points.
    # The lift fixes the branch point; over the other rotation center the
    # two sheets either stay put (lift order n) or swap (lift order 2n).
    for n in divisors(2 * g + 1):
        if n == 1:
            continue
        c = rotation_class_euler(n, 2 * g + 1) / 2
        m = (2 * g + 1) // n
        terms.append(
            SymmetryClassTerm(f"2g+1|a:n={n}", c, ((1, 3), (n, -m)), n)
        )
        terms.append(
            SymmetryClassTerm(
                f"2g+1|b:n={n}", c, ((1, 1), (2, 1), (n, m), (2 * n, -m)), n
            )
        )

    # No branch point fixed with (2g+2)/n even, i.e. n | g+1.  The two
    # rotation centers are interchangeable (extra factor 1/2); the fibers
    # over them are simultaneously fixed or simultaneously swapped, giving
    # two monomials.  For odd n a swap doubles the generic orbit length.
    for n in divisors(g + 1):
        if n == 1:
            continue
        c = rotation_class_euler(n, 2 * g + 2) / 4
        m = (2 * g + 2) // n
        if n % 2 == 0:
            terms.append(
                SymmetryClassTerm(
                    f"g+1-even|a:n={n}", c, ((1, 4), (n, -m)), n
                )
            )
            terms.append(
                SymmetryClassTerm(
                    f"g+1-even|b:n={n}", c, ((2, 2), (n, -m)), n
                )
            )
        else:
            terms.append(
                SymmetryClassTerm(f"g+1-odd|a:n={n}", c, ((1, 4), (n, -m)), n)
            )
            terms.append(
                SymmetryClassTerm(
                    f"g+1-odd|b:n={n}",
                    c,
                    ((2, 2), (n, m), (2 * n, -m)),
                    n,
                )
            )

    # No branch point fixed with (2g+2)/n odd: n | 2g+2 but n does not
    # divide g+1.  One center has swapped fibers and the other does not,
    # so the centers are distinguishable.
    for n in divisors(2 * g + 2):
        if n == 1 or (g + 1) % n == 0:
            continue
        c = rotation_class_euler(n, 2 * g + 2) / 2
        m = (2 * g + 2) // n
        terms.append(
            SymmetryClassTerm(
                f"2g+2-only:n={n}", c, ((1, 2), (2, 1), (n, -m)), n
            )
        )

    # Two branch points fixed: n | 2g with 2g free branch points.  For odd
    # n the centers are interchangeable and the n-th power of the lift is
    # either the identity or the involution (two monomials); for even n the
    # n-th power is always the involution.
    for n in divisors(g):
        if n == 1 or n % 2 == 0:
            continue
        c = rotation_class_euler(n, 2 * g) / 4
        m = (2 * g) // n
        terms.append(
            SymmetryClassTerm(f"g-odd|a:n={n}", c, ((1, 2), (n, -m)), n)
        )
        terms.append(
            SymmetryClassTerm(
                f"g-odd|b:n={n}", c, ((1, 2), (n, m), (2 * n, -m)), n
            )
        )
    for n in divisors(2 * g):
        if n == 1 or n % 2 != 0:
            continue
        c = rotation_class_euler(n, 2 * g) / 2
        m = (2 * g) // n
        terms.append(
            SymmetryClassTerm(
                f"2g-even:n={n}", c, ((1, 2), (n, m), (2 * n, -m)), n
            )
        )

    return terms


def equivariant_series(g: int, order: int) -> TSeries:
    """The equivariant generating function truncated at t^order.

    The t^n coefficient is chi^{S_n}(H_{g,n}) written in the power-sum
    basis; it is homogeneous of weight n.
    """
    if order < 0:
        raise ValueError(f"truncation order must be >= 0, got {order}")
    terms = symmetry_classes(g)
    return linear_combine(
        (term.coefficient, product_of_factors(term.factors, order))
        for term in terms
    )


def equivariant_schur(g: int, n: int) -> SchurVector:
    """chi^{S_n}(H_{g,n}) expanded in the Schur basis."""
    if n < 0:
        raise ValueError(f"point count must be >= 0, got {n}")
    series = equivariant_series(g, n)
    return p_to_schur(series.coeffs[n], n)


def closed_form_coefficients(g: int) -> tuple[Fraction, Fraction, Fraction]:
    """The weights (c_0, c_1, c_2) of the non-equivariant closed form.

    c_k weights the fixed-point-count-k bracket; c_k = c_{4-k} because
    composing an automorphism with the involution swaps k and 4-k fixed
    points.  The values are pinned by chi(H_{g,0}) = 1, chi(H_{g,2}) = 2
    and chi(H_{g,4}) = -2g.
    """
    GenusParams(g)
    return (
        Fraction(-g, 8 * (g + 1)),
        Fraction(g, 2 * g + 1),
        Fraction(g + 1, 4 * g),
    )


def nonequivariant_series(g: int, order: int) -> list[Fraction]:
    """Coefficients of t^n, i.e. chi(H_{g,n})/n!, for n = 0..order.

    Expansion of the closed form

        e0 [(1+t)^(2-2g) + (1+t)^(2+2g)]
        + c0 [1 + (1+t)^4] + c1 [(1+t) + (1+t)^3] + c2 (1+t)^2,

    with e0 the orbifold Euler characteristic of H_g.
    """
    if order < 0:
        raise ValueError(f"truncation order must be >= 0, got {order}")
    e0 = orbifold_euler_char(g)
    c0, c1, c2 = closed_form_coefficients(g)
    out = []
    for n in range(order + 1):
        value = (
            e0 * (gen_binomial(2 - 2 * g, n) + gen_binomial(2 + 2 * g, n))
            + c0 * ((1 if n == 0 else 0) + gen_binomial(4, n))
            + c1 * (gen_binomial(1, n) + gen_binomial(3, n))
            + c2 * gen_binomial(2, n)
        )
        out.append(value)
    return out


_SMALL_CHI = (1, 2, 2, 0, None, 0)  # n = 4 entry depends on g


def chi_pointed(g: int, n: int) -> int:
    """The integer Euler characteristic chi(H_{g,n}).

    Piecewise: pinned values 1, 2, 2, 0, -2g, 0 for n = 0..5; for n above
    2g+2 a single factorial ratio; in between the same ratio minus a
    correction supported on the involution bracket.
    """
    GenusParams(g)
    if n < 0:
        raise ValueError(f"point count must be >= 0, got {n}")
    if n <= 5:
        return -2 * g if n == 4 else _SMALL_CHI[n]
    lead = Fraction(
        (-1) ** (n + 1) * factorial(2 * g + n - 3),
        2 * 2 * g * (2 * g + 1) * (2 * g + 2) * factorial(2 * g - 3),
    )
    if n <= 2 * g + 2:
        lead -= Fraction(factorial(2 * g - 1), 2 * factorial(2 * g + 2 - n))
    assert lead.denominator == 1
    return int(lead)


def _indicator(g: int, k: int, r: int) -> int:
    # 1 if g is congruent to r mod k, else 0.
    return 1 if g % k == r % k else 0


def low_degree_coefficient(g: int, monomial: PSMonomial) -> Fraction:
    """Closed residue-class formulas for weight <= 4 mixed coefficients.

    Gives the coefficient of the monomial in the t^weight term of the
    equivariant series as a function of g mod 2, 3 or 4 only.  Supported
    monomials: p_2, p_1*p_2, p_1^2*p_2, p_2^2, p_3, p_1*p_3, p_4.
    """
    GenusParams(g)
    m2_0 = _indicator(g, 2, 0)
    m2_1 = _indicator(g, 2, 1)
    key = monomial.exps
    if key == ((2, 1),):
        return Fraction(1 - m2_0 + m2_1, 2)
    if key == ((1, 1), (2, 1)):
        return Fraction(1 - m2_0 + m2_1)
    if key == ((1, 2), (2, 1)):
        return Fraction(1, 2) - Fraction(m2_0, 2) + m2_1
    if key == ((2, 2),):
        return Fraction(-m2_1, 4)
    if key == ((3, 1),):
        return Fraction(0)
    if key == ((1, 1), (3, 1)):
        return Fraction(2, 3) * (_indicator(g, 3, 2) - _indicator(g, 3, 1))
    if key == ((4, 1),):
        value = (
            Fraction(_indicator(g, 4, 3), 4)
            - Fraction(_indicator(g, 4, 1), 4)
            + Fraction((-1) ** g, 4)
        )
        if m2_0:
            value += Fraction((-1) ** ((1 - g // 2) % 2), 4)
        return value
    raise ValueError(f"no closed form for monomial {monomial}")
