from fractions import Fraction
from math import factorial

import pytest

from hypeuler.schur_transform import (
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
from hypeuler.symfunc_series import PSMonomial, PSPolynomial
from oracles import character_oracle, partition_count


class TestPartition:
    def test_canonical_form(self):
        p = Partition((3, 2, 2))
        assert p.parts == (3, 2, 2)
        assert p.size == 7 and len(p) == 3

    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_conjugate(self):
        assert Partition((3, 1)).conjugate() == Partition((2, 1, 1))
        assert Partition(()).conjugate() == Partition(())
        for lam in partitions_of(6):
            assert lam.conjugate().conjugate() == lam

    def test_render(self):
        assert str(Partition((2, 1))) == "[2,1]"


class TestPartitionsOf:
    def test_empty(self):
        assert partitions_of(0) == [Partition(())]

    def test_counts(self):
        assert len(partitions_of(4)) == 5
        assert len(partitions_of(10)) == 42
        for n in range(13):
            assert len(partitions_of(n)) == partition_count(n)

    def test_reverse_lex_order(self):
        got = [p.parts for p in partitions_of(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        for n in range(9):
            parts = [p.parts for p in partitions_of(n)]
            assert parts == sorted(parts, reverse=True)


class TestMnCharacter:
    def test_trivial_representation(self):
        for n in range(1, 7):
            row = Partition((n,))
            for mu in partitions_of(n):
                assert mn_character(row, mu) == 1

    def test_sign_representation(self):
        assert mn_character(Partition((1, 1, 1)), Partition((2, 1))) == -1

    def test_standard_of_s3_on_three_cycle(self):
        assert mn_character(Partition((2, 1)), Partition((3,))) == -1

    def test_matches_alternant_oracle(self):
        for n in range(7):
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    assert mn_character(lam, mu) == character_oracle(
                        lam.parts, mu.parts
                    ), (lam, mu)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            mn_character(Partition((2,)), Partition((3,)))

    def test_orthogonality(self):
        for n in range(7):
            parts = partitions_of(n)
            for mu in parts:
                for nu in parts:
                    total = sum(
                        mn_character(lam, mu) * mn_character(lam, nu)
                        for lam in parts
                    )
                    assert total == (
                        centralizer_order(mu) if mu == nu else 0
                    )


class TestCycleType:
    def test_pure_p1(self):
        assert p_monomial_cycle_type(PSMonomial(((1, 3),))) == Partition(
            (1, 1, 1)
        )

    def test_mixed(self):
        mono = PSMonomial(((1, 2), (2, 1)))
        assert p_monomial_cycle_type(mono) == Partition((2, 1, 1))

    def test_single_generator(self):
        assert p_monomial_cycle_type(PSMonomial(((4, 1),))) == Partition((4,))

    def test_size_is_weight(self):
        mono = PSMonomial(((2, 2), (3, 1)))
        assert p_monomial_cycle_type(mono).size == mono.weight


class TestCentralizerOrder:
    def test_values(self):
        assert centralizer_order(Partition(())) == 1
        assert centralizer_order(Partition((1, 1, 1))) == 6
        assert centralizer_order(Partition((2, 1))) == 2
        assert centralizer_order(Partition((3,))) == 3

    def test_sums_to_factorial(self):
        # sum over cycle types of n!/z_mu counts all permutations
        for n in range(8):
            total = sum(
                Fraction(factorial(n), centralizer_order(mu))
                for mu in partitions_of(n)
            )
            assert total == factorial(n)


class TestPToSchur:
    def test_p1(self):
        got = p_to_schur(PSPolynomial.gen(1), 1)
        assert got == SchurVector(1, {Partition((1,)): Fraction(1)})

    def test_p2(self):
        got = p_to_schur(PSPolynomial.gen(2), 2)
        assert got == SchurVector(
            2, {Partition((2,)): Fraction(1), Partition((1, 1)): Fraction(-1)}
        )

    def test_p1_squared(self):
        got = p_to_schur(PSPolynomial.gen(1, 2), 2)
        assert got == SchurVector(
            2, {Partition((2,)): Fraction(1), Partition((1, 1)): Fraction(1)}
        )

    def test_rejects_inhomogeneous(self):
        mixed = PSPolynomial.gen(1) + PSPolynomial.gen(2)
        with pytest.raises(ValueError):
            p_to_schur(mixed, 2)

    def test_round_trip_through_schur_basis(self):
        for n in range(8):
            for lam in partitions_of(n):
                unit = SchurVector(n, {lam: Fraction(1)})
                assert p_to_schur(schur_to_p(unit), n) == unit

    def test_round_trip_through_p_basis(self):
        for n in range(7):
            for mu in partitions_of(n):
                exps: dict[int, int] = {}
                for part in mu.parts:
                    exps[part] = exps.get(part, 0) + 1
                mono = PSMonomial(sorted(exps.items()))
                p_mu = PSPolynomial({mono: Fraction(1)})
                back = schur_to_p(p_to_schur(p_mu, n))
                assert back == p_mu, mu


class TestSchurDimensionSum:
    def test_single_box(self):
        assert schur_dimension_sum(
            SchurVector(1, {Partition((1,)): Fraction(1)})
        ) == 1

    def test_two_boxes(self):
        vec = SchurVector(
            2, {Partition((2,)): Fraction(1), Partition((1, 1)): Fraction(1)}
        )
        assert schur_dimension_sum(vec) == 2

    def test_regular_representation(self):
        # p_1^n carries the regular character: sum of (f^lambda)^2 = n!
        for n in range(1, 8):
            vec = p_to_schur(PSPolynomial.gen(1, n), n)
            assert schur_dimension_sum(vec) == factorial(n)

    def test_empty(self):
        assert schur_dimension_sum(SchurVector(3)) == 0


class TestSignTwist:
    def test_conjugates_labels(self):
        vec = SchurVector(
            3, {Partition((3,)): Fraction(2), Partition((2, 1)): Fraction(-1)}
        )
        got = sign_twist(vec)
        assert got.coefficient(Partition((1, 1, 1))) == 2
        assert got.coefficient(Partition((2, 1))) == -1

    def test_matches_sign_on_p_basis(self):
        # twisting then expanding equals expanding the sign-scaled p's
        for n in range(6):
            for mu in partitions_of(n):
                exps: dict[int, int] = {}
                for part in mu.parts:
                    exps[part] = exps.get(part, 0) + 1
                mono = PSMonomial(sorted(exps.items()))
                eps = (-1) ** (n - len(mu))
                lhs = sign_twist(
                    p_to_schur(PSPolynomial({mono: Fraction(1)}), n)
                )
                rhs = p_to_schur(PSPolynomial({mono: Fraction(eps)}), n)
                assert lhs == rhs, mu

    def test_involution(self):
        vec = p_to_schur(PSPolynomial.gen(1, 4), 4)
        assert sign_twist(sign_twist(vec)) == vec


class TestSchurVector:
    def test_size_validation(self):
        with pytest.raises(ValueError):
            SchurVector(2, {Partition((3,)): Fraction(1)})

    def test_sorted_items_reverse_lex(self):
        vec = p_to_schur(PSPolynomial.gen(1, 3), 3)
        keys = [lam.parts for lam, _ in vec.sorted_items()]
        assert keys == sorted(keys, reverse=True)
