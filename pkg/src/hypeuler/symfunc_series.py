"""Sparse polynomials in power-sum generators and truncated series over them.

The ambient ring is Q[p_1, p_2, ...], the polynomial ring in the power-sum
symmetric functions, graded so that p_k has weight k.  A ``PSMonomial`` is a
product p_{k_1}^{e_1} * ... stored as a sorted sparse exponent map, a
``PSPolynomial`` maps monomials to rational coefficients, and a ``TSeries``
is a polynomial in a formal variable t truncated at a fixed order whose t^n
coefficient is a ``PSPolynomial``.

All series arithmetic discards t-degrees above the truncation order, and
multiplication additionally drops monomials of weight above that order: the
pipeline only ever builds series whose t^n coefficient is homogeneous of
weight n, so nothing that could survive to a retained degree is ever lost,
and memory stays bounded.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .exact_arith import Rational, gen_binomial

__all__ = [
    "PSMonomial",
    "PSPolynomial",
    "TSeries",
    "ps_mul",
    "series_mul",
    "binomial_factor",
    "product_of_factors",
    "linear_combine",
    "specialize_p1",
]


class PSMonomial:
    """A monomial in the p_k generators, e.g. p_1^2 * p_3.

    Stored as a tuple of (generator index, exponent) pairs sorted by
    ascending index, with no zero exponents; the empty tuple is the unit
    monomial.  Instances are immutable and hashable.
    """

    __slots__ = ("exps", "weight", "_hash")

    exps: tuple[tuple[int, int], ...]
    weight: int

    def __init__(self, exps: Iterable[tuple[int, int]] = ()):
        exps = tuple(exps)
        prev = 0
        for k, e in exps:
            if k <= prev:
                raise ValueError(f"generator indices must be ascending: {exps}")
            if e <= 0:
                raise ValueError(f"exponents must be positive: {exps}")
            prev = k
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "weight", sum(k * e for k, e in exps))
        object.__setattr__(self, "_hash", hash(exps))

    def __setattr__(self, name, value):
        raise AttributeError("PSMonomial is immutable")

    @classmethod
    def gen(cls, k: int, e: int = 1) -> "PSMonomial":
        """The monomial p_k^e."""
        return cls(((k, e),))

    def __mul__(self, other: "PSMonomial") -> "PSMonomial":
        a, b = self.exps, other.exps
        if not a:
            return other
        if not b:
            return self
        merged: list[tuple[int, int]] = []
        i = j = 0
        while i < len(a) and j < len(b):
            ka, ea = a[i]
            kb, eb = b[j]
            if ka < kb:
                merged.append((ka, ea))
                i += 1
            elif kb < ka:
                merged.append((kb, eb))
                j += 1
            else:
                merged.append((ka, ea + eb))
                i += 1
                j += 1
        merged.extend(a[i:])
        merged.extend(b[j:])
        return PSMonomial(merged)

    def is_pure_p1(self) -> bool:
        """True if the monomial is a power of p_1 (or the unit)."""
        return not self.exps or (len(self.exps) == 1 and self.exps[0][0] == 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PSMonomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "PSMonomial") -> bool:
        return self.exps < other.exps

    def __repr__(self) -> str:
        return f"PSMonomial({self.exps!r})"

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(
            f"p{k}" if e == 1 else f"p{k}^{e}" for k, e in self.exps
        )


_UNIT = PSMonomial()


class PSPolynomial:
    """A finite Q-linear combination of power-sum monomials.

    Zero coefficients are never stored; the zero polynomial has no terms.
    Instances are treated as immutable: all operations return new values.
    """

    __slots__ = ("terms",)

    terms: dict[PSMonomial, Fraction]

    def __init__(self, terms: Mapping[PSMonomial, Rational] | None = None):
        clean: dict[PSMonomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[mono] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PSPolynomial is immutable")

    @classmethod
    def zero(cls) -> "PSPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "PSPolynomial":
        return cls({_UNIT: Fraction(1)})

    @classmethod
    def constant(cls, c: Rational) -> "PSPolynomial":
        return cls({_UNIT: Fraction(c)})

    @classmethod
    def gen(cls, k: int, e: int = 1) -> "PSPolynomial":
        """The polynomial p_k^e."""
        return cls({PSMonomial.gen(k, e): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PSPolynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "PSPolynomial") -> "PSPolynomial":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, 0) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return PSPolynomial(out)

    def __neg__(self) -> "PSPolynomial":
        return PSPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "PSPolynomial") -> "PSPolynomial":
        return self + (-other)

    def scaled(self, c: Rational) -> "PSPolynomial":
        c = Fraction(c)
        if not c:
            return PSPolynomial()
        return PSPolynomial({m: c * v for m, v in self.terms.items()})

    def coefficient(self, mono: PSMonomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def is_homogeneous(self, weight: int) -> bool:
        """True if every stored monomial has the given weight."""
        return all(m.weight == weight for m in self.terms)

    def sorted_terms(self) -> list[tuple[PSMonomial, Fraction]]:
        """Terms in the canonical (exponent-lexicographic) order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].exps)

    def __repr__(self) -> str:
        return f"PSPolynomial({dict(self.sorted_terms())!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            if mono is _UNIT or not mono.exps:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(str(mono))
            elif coeff == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def ps_mul(a: PSPolynomial, b: PSPolynomial, weight_cap: int) -> PSPolynomial:
    """Product of two polynomials, dropping monomials of weight > weight_cap."""
    if weight_cap < 0:
        raise ValueError(f"weight_cap must be >= 0, got {weight_cap}")
    out: dict[PSMonomial, Fraction] = {}
    for ma, ca in a.terms.items():
        wa = ma.weight
        for mb, cb in b.terms.items():
            if wa + mb.weight > weight_cap:
                continue
            m = ma * mb
            new = out.get(m, 0) + ca * cb
            if new:
                out[m] = new
            else:
                out.pop(m, None)
    return PSPolynomial(out)


class TSeries:
    """A power series in t truncated at a fixed order N.

    ``coeffs[n]`` is the PSPolynomial coefficient of t^n, for n = 0..N.
    Series produced by the moduli pipeline are weight-graded (the t^n
    coefficient is homogeneous of weight n); arithmetic preserves that.
    """

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[PSPolynomial, ...]

    def __init__(self, order: int, coeffs: Iterable[PSPolynomial]):
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        coeffs = tuple(coeffs)
        if len(coeffs) != order + 1:
            raise ValueError(
                f"expected {order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("TSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls(order, [PSPolynomial.zero()] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls(
            order,
            [PSPolynomial.one()] + [PSPolynomial.zero()] * order,
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "TSeries") -> "TSeries":
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} != {other.order}"
            )
        return TSeries(
            self.order,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def __mul__(self, other: "TSeries") -> "TSeries":
        return series_mul(self, other)

    def scaled(self, c: Rational) -> "TSeries":
        return TSeries(self.order, [p.scaled(c) for p in self.coeffs])

    def is_weight_graded(self) -> bool:
        """True if the t^n coefficient is homogeneous of weight n for all n."""
        return all(
            poly.is_homogeneous(n) for n, poly in enumerate(self.coeffs)
        )

    def __iter__(self) -> Iterator[PSPolynomial]:
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"TSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    """Cauchy product truncated at the shared order.

    Monomials of weight above the truncation order are dropped during
    accumulation; for weight-graded operands (the only kind the pipeline
    produces) this loses nothing.
    """
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} != {b.order}")
    n_max = a.order
    buckets: list[dict[PSMonomial, Fraction]] = [{} for _ in range(n_max + 1)]
    for i, pa in enumerate(a.coeffs):
        if not pa:
            continue
        terms_a = list(pa.terms.items())
        for j in range(n_max - i + 1):
            pb = b.coeffs[j]
            if not pb:
                continue
            bucket = buckets[i + j]
            for ma, ca in terms_a:
                wa = ma.weight
                for mb, cb in pb.terms.items():
                    if wa + mb.weight > n_max:
                        continue
                    m = ma * mb
                    new = bucket.get(m, 0) + ca * cb
                    if new:
                        bucket[m] = new
                    else:
                        bucket.pop(m, None)
    return TSeries(n_max, [PSPolynomial(bk) for bk in buckets])


def binomial_factor(k: int, m: int, order: int) -> TSeries:
    """The expansion of (1 + p_k t^k)^m truncated at the given order.

    The exponent m may be any integer; the t^(k*j) coefficient is
    C(m, j) * p_k^j.  A factor with k > order contributes only its
    constant term 1.
    """
    if k < 1:
        raise ValueError(f"generator index must be >= 1, got {k}")
    if order < 0:
        raise ValueError(f"truncation order must be >= 0, got {order}")
    coeffs = [PSPolynomial.zero() for _ in range(order + 1)]
    for j in range(order // k + 1):
        c = gen_binomial(m, j)
        if c == 0:
            continue
        if j == 0:
            coeffs[0] = PSPolynomial.one()
        else:
            coeffs[k * j] = PSPolynomial({PSMonomial.gen(k, j): Fraction(c)})
    return TSeries(order, coeffs)


def product_of_factors(
    factors: Iterable[tuple[int, int]], order: int
) -> TSeries:
    """Truncated product of binomial factors (1 + p_k t^k)^m.

    The empty product is the unit series.
    """
    result = TSeries.one(order)
    for k, m in factors:
        result = series_mul(result, binomial_factor(k, m, order))
    return result


def linear_combine(terms: Iterable[tuple[Rational, TSeries]]) -> TSeries:
    """Exact weighted sum of series sharing one truncation order."""
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combine needs at least one term")
    order = terms[0][1].order
    buckets: list[dict[PSMonomial, Fraction]] = [{} for _ in range(order + 1)]
    for coeff, series in terms:
        if series.order != order:
            raise ValueError(
                f"truncation orders differ: {series.order} != {order}"
            )
        coeff = Fraction(coeff)
        if not coeff:
            continue
        for n, poly in enumerate(series.coeffs):
            bucket = buckets[n]
            for mono, c in poly.terms.items():
                new = bucket.get(mono, 0) + coeff * c
                if new:
                    bucket[mono] = new
                else:
                    bucket.pop(mono, None)
    return TSeries(order, [PSPolynomial(bk) for bk in buckets])


def specialize_p1(series: TSeries) -> list[Fraction]:
    """Evaluate each t^n coefficient at p_1 = 1, p_k = 0 for k > 1.

    Only monomials that are pure powers of p_1 survive; the n-th entry of
    the result is the sum of their coefficients.  For the equivariant
    pipeline this yields the non-equivariant Euler characteristic divided
    by n!.
    """
    out: list[Fraction] = []
    for poly in series.coeffs:
        total = Fraction(0)
        for mono, coeff in poly.terms.items():
            if mono.is_pure_p1():
                total += coeff
        out.append(total)
    return out
