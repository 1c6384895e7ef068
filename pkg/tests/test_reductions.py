import random
from collections import Counter

import pytest

from rainbowkit import (
    ExtremalPair,
    GenSpec,
    HasZeroSum,
    PreconditionError,
    ResidueMultiset,
    RowDuplicateError,
    SymbolMatrix,
    brute_zero_sum,
    classify_multiset,
    edge,
    egz_family,
    enumerate_multisets,
    find_transversal,
    find_zero_sum_subset,
    generate,
    matrix_to_family,
    transversal_is_valid,
)


class TestSymbolMatrix:
    def test_row_duplicate_named(self):
        with pytest.raises(RowDuplicateError) as info:
            SymbolMatrix(((1, 2), (3, 3)))
        assert (info.value.row, info.value.symbol) == (1, 3)

    def test_ragged_rejected(self):
        with pytest.raises(PreconditionError):
            SymbolMatrix(((1, 2), (1,)))


class TestMatrixToFamily:
    def test_one_by_one(self):
        fam = matrix_to_family(SymbolMatrix(((7,),)))
        assert len(fam) == 1
        assert list(fam[0]) == [edge(0, 0)]

    def test_rows_become_matchings(self):
        fam = matrix_to_family(SymbolMatrix(((1, 2), (1, 2), (2, 1))))
        assert len(fam) == 3
        assert all(len(m) == 2 for m in fam)
        # same symbol in different rows meets the same right vertex
        assert edge(0, 0) in fam[0] and edge(0, 0) in fam[1]
        assert edge(1, 0) in fam[2]


class TestFindTransversal:
    def test_one_by_one(self):
        result = find_transversal(SymbolMatrix(((5,),)))
        assert result.entries == {(0, 0)}

    def test_three_by_two(self):
        matrix = SymbolMatrix(((1, 2), (1, 2), (2, 1)))
        result = find_transversal(matrix)
        assert transversal_is_valid(matrix, result)
        assert len(result) == 2

    def test_two_by_two_infeasible(self):
        assert find_transversal(SymbolMatrix(((1, 2), (2, 1)))) is None

    def test_wide_matrix_uses_row_count(self):
        matrix = SymbolMatrix(((1, 2, 3),))
        result = find_transversal(matrix)
        assert len(result) == 1

    def test_random_guaranteed_matrices(self):
        rng = random.Random(5)
        for _ in range(200):
            cols = rng.randint(1, 4)
            matrix = generate(GenSpec.matrix(
                2 * cols - 1, cols, cols + rng.randint(0, 2), rng.getrandbits(63)))
            result = find_transversal(matrix)
            assert result is not None
            assert transversal_is_valid(matrix, result)


class TestEgzFamily:
    def test_shift_one_mod_two(self):
        fam = egz_family(ResidueMultiset(2, (1,)))
        assert list(fam[0]) == [edge(0, 1), edge(1, 0)]

    def test_identity_shift(self):
        fam = egz_family(ResidueMultiset(3, (0,)))
        assert list(fam[0]) == [edge(0, 0), edge(1, 1), edge(2, 2)]

    def test_multiplicities_in_sorted_order(self):
        fam = egz_family(ResidueMultiset(3, (1, 0, 1, 0)))
        assert len(fam) == 4
        assert fam[0] == fam[1] and fam[2] == fam[3]
        assert fam[0] != fam[2]


class TestFindZeroSumSubset:
    def test_three_residues_mod_two(self):
        assert find_zero_sum_subset(ResidueMultiset(2, (0, 0, 1))) == (0, 0)

    def test_n_copies_sum_to_zero(self):
        assert find_zero_sum_subset(ResidueMultiset(3, (1,) * 5)) == (1, 1, 1)

    def test_blocking_pair(self):
        assert find_zero_sum_subset(ResidueMultiset(3, (0, 0, 1, 1))) is None

    def test_sum_identity_on_random_witnesses(self):
        rng = random.Random(31)
        for _ in range(300):
            n = rng.randint(1, 5)
            multiset = ResidueMultiset(
                n, tuple(rng.randrange(n) for _ in range(rng.randint(1, 2 * n + 1))))
            witness = find_zero_sum_subset(multiset)
            if witness is not None:
                assert len(witness) == n
                assert sum(witness) % n == 0
                assert not Counter(witness) - Counter(multiset.elements)
            assert (witness is None) == (brute_zero_sum(multiset) is None)


class TestClassifyMultiset:
    def test_blocking_pair(self):
        verdict = classify_multiset(ResidueMultiset(3, (0, 0, 1, 1)))
        assert verdict == ExtremalPair(0, 1)

    def test_two_element_case(self):
        assert classify_multiset(ResidueMultiset(2, (0, 1))) == ExtremalPair(0, 1)

    def test_all_zeros(self):
        verdict = classify_multiset(ResidueMultiset(3, (0, 0, 0, 0)))
        assert verdict == HasZeroSum((0, 0, 0))

    def test_wrong_size_rejected(self):
        with pytest.raises(PreconditionError):
            classify_multiset(ResidueMultiset(3, (0, 0, 1)))

    def test_exhaustive_small_dichotomy(self):
        for n in (2, 3, 4):
            for multiset in enumerate_multisets(n, 2 * n - 2):
                verdict = classify_multiset(multiset)
                feasible = brute_zero_sum(multiset) is not None
                assert isinstance(verdict, HasZeroSum) == feasible
