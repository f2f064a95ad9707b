from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest

from kequal import oracle
from kequal.operads import z_com, z_hook, z_lie
from kequal.series import Q, CycleIndexSeries, LaurentCoeff, PrecisionExceeded, extract_arity, from_partition
from kequal.theorems import ModelParams, theorem1_closed

F = Fraction


def cycle_type(perm):
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        length, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


class TestPartitions:
    def test_small(self):
        assert oracle.partitions(0) == [()]
        assert oracle.partitions(3) == [(3,), (2, 1), (1, 1, 1)]

    def test_counts(self):
        assert [len(oracle.partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_too_large(self):
        with pytest.raises(oracle.TooLarge):
            oracle.partitions(26)

    def test_class_sizes_by_enumeration(self):
        for n in range(1, 7):
            counts = {}
            for perm in permutations(range(n)):
                mu = cycle_type(perm)
                counts[mu] = counts.get(mu, 0) + 1
            assert counts == {mu: factorial(n) // oracle.z_lambda(mu) for mu in oracle.partitions(n)}


class TestMurnaghanNakayama:
    def test_sign(self):
        assert oracle.mn_char((1, 1), (2,)) == -1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_trivial(self, n):
        assert all(oracle.mn_char((n,), mu) == 1 for mu in oracle.partitions(n))

    def test_standard_s3(self):
        assert [oracle.mn_char((2, 1), mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]

    def test_mismatch(self):
        with pytest.raises(oracle.ShapeMismatch):
            oracle.mn_char((2, 1), (2,))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_orthonormal(self, n):
        shapes = oracle.partitions(n)
        chars = {s: oracle.irreducible(s) for s in shapes}
        for a in shapes:
            for b in shapes:
                assert oracle.hall_inner(chars[a], chars[b]) == (1 if a == b else 0)
        assert sum(oracle.mn_char(s, (1,) * n) ** 2 for s in shapes) == factorial(n)

    def test_permutation_character_s4(self):
        # fixed points = trivial + standard
        for mu in oracle.partitions(4):
            fixed = mu.count(1)
            assert fixed == oracle.mn_char((4,), mu) + oracle.mn_char((3, 1), mu)


class TestExteriorPowers:
    def test_three_cycle(self):
        assert oracle.ext_power_chars(3, (3,)) == [1, 0, 0, 1]

    def test_identity(self):
        assert oracle.ext_power_chars(5, (1,) * 5) == [comb(5, j) for j in range(6)]

    def test_transposition(self):
        assert oracle.ext_power_chars(3, (2, 1)) == [1, 1, -1, -1]

    def test_first_power_is_fixed_points(self):
        for n in range(1, 8):
            for mu in oracle.partitions(n):
                assert oracle.ext_power_chars(n, mu)[1] == mu.count(1)


class TestInducedAndHooks:
    def test_induced_edges(self):
        for mu in oracle.partitions(5):
            assert oracle.induced_hook_char(5, 0, mu) == 1
            assert oracle.induced_hook_char(5, 5, mu) == oracle.sign(mu)
        assert oracle.induced_hook_char(3, 1, (2, 1)) == 1

    def test_induced_range(self):
        with pytest.raises(oracle.InvalidRange):
            oracle.induced_hook_char(3, 4, (3,))

    def test_exterior_power_is_induced(self):
        for n in range(0, 9):
            for mu in oracle.partitions(n):
                ext = oracle.ext_power_chars(n, mu)
                assert [oracle.induced_hook_char(n, j, mu) for j in range(n + 1)] == ext

    def test_exterior_splits_over_standard(self):
        # /\^k W_n = /\^k V_(n-1,1) + /\^(k-1) V_(n-1,1), with /\^k V_(n-1,1) the hook (n-k, 1^k)
        for n in range(2, 9):
            for k in range(1, n):
                hook_k = oracle.hook_char_alternating(n, k + 1)
                hook_km1 = oracle.hook_char_alternating(n, k)
                for mu in oracle.partitions(n):
                    assert oracle.ext_power_chars(n, mu)[k] == hook_k(mu) + hook_km1(mu)

    def test_hook_examples(self):
        chi = oracle.hook_char_alternating(3, 2)
        assert [chi(mu) for mu in [(1, 1, 1), (2, 1), (3,)]] == [2, 0, -1]
        for n in range(1, 7):
            sign = oracle.hook_char_alternating(n, n)
            assert all(sign(mu) == oracle.sign(mu) for mu in oracle.partitions(n))
            triv = oracle.hook_char_alternating(n, 1)
            assert all(triv(mu) == 1 for mu in oracle.partitions(n))

    def test_three_way(self):
        for n in range(1, 9):
            for k in range(1, n + 1):
                mn = oracle.irreducible(oracle.hook_shape(n, k))
                assert mn == oracle.hook_char_alternating(n, k) == oracle.hook_char_induced(n, k)


class TestCycleIndexConversion:
    def test_trivial_and_sign(self):
        triv = oracle.GradedCharacter.from_ints(2, lambda mu: 1)
        sign = oracle.GradedCharacter.from_ints(2, oracle.sign)
        assert oracle.cycle_index_from_character(triv) == CycleIndexSeries(
            {from_partition((1, 1)): F(1, 2), from_partition((2,)): F(1, 2)})
        assert oracle.cycle_index_from_character(sign) == CycleIndexSeries(
            {from_partition((1, 1)): F(1, 2), from_partition((2,)): F(-1, 2)})

    def test_lie2(self):
        lie2 = oracle.GradedCharacter(2, {(1, 1): LaurentCoeff.const(1), (2,): LaurentCoeff.const(-1)})
        assert oracle.cycle_index_from_character(lie2) == extract_arity(z_lie(2), 2)

    def test_lie3_character(self):
        chi = oracle.character_from_cycle_index(z_lie(3), 3)
        assert chi == oracle.GradedCharacter.from_ints(3, lambda mu: {(1, 1, 1): 2, (2, 1): 0, (3,): -1}[mu])

    def test_roundtrip(self):
        series = theorem1_closed(ModelParams(2, 3, 6))
        for n in range(7):
            chi = oracle.character_from_cycle_index(series, n)
            assert oracle.cycle_index_from_character(chi) == extract_arity(series, n)
            assert oracle.character_from_cycle_index(oracle.cycle_index_from_character(chi), n) == chi

    def test_com_is_trivial(self):
        assert oracle.character_from_cycle_index(z_com(3), 3) == oracle.GradedCharacter.from_ints(3, lambda mu: 1)

    def test_graded_dimension_of_theorem(self):
        chi = oracle.character_from_cycle_index(theorem1_closed(ModelParams(2, 3, 4)), 3)
        assert chi((1, 1, 1)) == 1 + Q ** 3

    def test_precision(self):
        with pytest.raises(PrecisionExceeded):
            oracle.character_from_cycle_index(z_com(2), 3)


class TestHallAndDecompose:
    def test_inner(self):
        triv = oracle.GradedCharacter.from_ints(4, lambda mu: 1)
        sign = oracle.GradedCharacter.from_ints(4, oracle.sign)
        assert oracle.hall_inner(triv, triv) == 1
        assert oracle.hall_inner(triv, sign) == 0

    def test_regular(self):
        n = 5
        regular = oracle.GradedCharacter.from_ints(n, lambda mu: factorial(n) if mu == (1,) * n else 0)
        for shape in oracle.partitions(n):
            assert oracle.hall_inner(regular, oracle.irreducible(shape)) == oracle.mn_char(shape, (1,) * n)

    def test_arity_mismatch(self):
        with pytest.raises(oracle.ArityMismatch):
            oracle.hall_inner(oracle.irreducible((2,)), oracle.irreducible((3,)))

    def test_trivial(self):
        got = oracle.decompose(oracle.GradedCharacter.from_ints(4, lambda mu: 1))
        assert {key: m for key, m in got.items() if m} == {((4,), (0, 0, 0)): 1}

    def test_hooks(self):
        for k in range(2, 6):
            h = z_hook(k, 7)
            for n in range(k, 8):
                got = oracle.decompose(oracle.character_from_cycle_index(h, n))
                assert {key: m for key, m in got.items() if m} == {(oracle.hook_shape(n, k), (k - 2, 0, 0)): 1}

    def test_theorem_arity3(self):
        chi = oracle.character_from_cycle_index(theorem1_closed(ModelParams(2, 3, 3)), 3)
        got = {key: m for key, m in oracle.decompose(chi).items() if m}
        # the top class of the 3-sphere is Sigma_3-invariant
        assert got == {((3,), (0, 0, 0)): 1, ((3,), (3, 0, 0)): 1}

    def test_virtual_rejected(self):
        virtual = oracle.GradedCharacter.from_ints(3, lambda mu: -1)
        with pytest.raises(oracle.NegativeMultiplicity):
            oracle.decompose(virtual)
        assert oracle.decompose(virtual, genuine=False)[((3,), (0, 0, 0))] == -1
        half = oracle.GradedCharacter(2, {(1, 1): LaurentCoeff.const(1), (2,): LaurentCoeff.const(0)})
        with pytest.raises(oracle.NonIntegralMultiplicity):
            oracle.decompose(half)
