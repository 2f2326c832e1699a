from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from rightcells.tableaux import (
    column_word,
    conjugate,
    enumerate_syt,
    partitions,
    row_word,
    rs_insert,
    rs_insert_linear,
    shape_of,
    syt_count,
    tableau_from_text,
    tableau_to_text,
    transpose,
    validate_tableau,
)


def all_syt(n):
    for shape in partitions(n):
        yield from enumerate_syt(shape)


class TestValidate:
    def test_worked_example(self):
        assert validate_tableau([[1, 3, 5], [2, 4]]) == ((1, 3, 5), (2, 4))

    def test_duplicate(self):
        with pytest.raises(ValueError, match="duplicate entry 2"):
            validate_tableau([[1, 2], [2, 3]])

    def test_row_order(self):
        with pytest.raises(ValueError, match="row 2 not increasing"):
            validate_tableau([[1, 4], [3, 2]])

    def test_column_order(self):
        with pytest.raises(ValueError, match="column 1 not increasing"):
            validate_tableau([[2, 3], [1, 4]])

    def test_shape(self):
        with pytest.raises(ValueError, match="not weakly decreasing"):
            validate_tableau([[1], [2, 3]])

    def test_missing_entry(self):
        with pytest.raises(ValueError, match="out of range"):
            validate_tableau([[1, 2], [5, 6]])


class TestText:
    def test_parse_worked_example(self):
        assert tableau_from_text("1,3,5|2,4") == ((1, 3, 5), (2, 4))
        assert tableau_from_text("1,2,3") == ((1, 2, 3),)

    def test_parse_rejects_invalid(self):
        with pytest.raises(ValueError, match="row 2 not increasing"):
            tableau_from_text("1,4|3,2")
        with pytest.raises(ValueError, match="empty field"):
            tableau_from_text("1,3|,")

    def test_round_trip_all_small(self):
        for n in range(1, 7):
            for tab in all_syt(n):
                assert tableau_from_text(tableau_to_text(tab)) == tab


class TestInsertion:
    def test_monotone_words(self):
        assert rs_insert((1, 2, 3)) == ((1, 2, 3),)
        assert rs_insert((3, 2, 1)) == ((1,), (2,), (3,))

    def test_worked_example(self):
        assert rs_insert((2, 4, 1, 3, 5)) == ((1, 3, 5), (2, 4))

    def test_linear_path_agrees_exhaustive(self):
        for n in range(1, 8):
            for w in permutations(range(1, n + 1)):
                assert rs_insert(w) == rs_insert_linear(w)

    def test_shape_is_partition_exhaustive(self):
        for w in permutations(range(1, 8)):
            shape = shape_of(rs_insert(w))
            assert sum(shape) == 7
            assert all(a >= b for a, b in zip(shape, shape[1:]))


class TestReadingWords:
    def test_row_word_examples(self):
        assert row_word(((1, 3, 5), (2, 4))) == (2, 4, 1, 3, 5)
        assert row_word(((1, 2, 3),)) == (1, 2, 3)
        assert row_word(((1, 2), (3,), (4,))) == (4, 3, 1, 2)

    def test_column_word_examples(self):
        assert column_word(((1, 3, 5), (2, 4))) == (2, 1, 4, 3, 5)
        assert column_word(((1,), (2,), (3,))) == (3, 2, 1)
        assert column_word(((1, 4), (2, 5), (3,))) == (3, 2, 1, 5, 4)

    def test_reading_words_insert_back(self):
        for n in range(1, 8):
            for tab in all_syt(n):
                assert rs_insert(row_word(tab)) == tab
                assert rs_insert(column_word(tab)) == tab


class TestShape:
    def test_examples(self):
        assert shape_of(((1, 3, 5), (2, 4))) == (3, 2)
        assert shape_of(((1, 2, 3),)) == (3,)
        assert shape_of(((1,), (2,), (3,))) == (1, 1, 1)

    def test_conjugate(self):
        assert conjugate((3, 2)) == (2, 2, 1)
        assert conjugate((4, 2, 1)) == (3, 2, 1, 1)


class TestCounting:
    @pytest.mark.parametrize(
        "shape,count",
        [
            ((5,), 1),
            ((2, 2), 2),
            ((2, 1, 1), 3),
            ((3, 2, 2), 21),
            ((5, 4, 1), 288),
            ((4, 3, 2, 1), 768),
        ],
    )
    def test_hook_formula_values(self, shape, count):
        assert syt_count(shape) == count

    def test_enumeration_matches_count(self):
        for n in range(1, 9):
            for shape in partitions(n):
                tabs = list(enumerate_syt(shape))
                assert len(tabs) == len(set(tabs)) == syt_count(shape)

    def test_rsk_identity(self):
        # sum over shapes of (number of tableaux)^2 counts all permutations
        for n in range(1, 9):
            assert sum(syt_count(s) ** 2 for s in partitions(n)) == factorial(n)

    def test_enumerated_tableaux_are_standard(self):
        for n in range(1, 7):
            for tab in all_syt(n):
                assert validate_tableau(tab) == tab


class TestEnumerationOrder:
    def test_two_by_two(self):
        assert list(enumerate_syt((2, 2))) == [((1, 2), (3, 4)), ((1, 3), (2, 4))]

    def test_single_row_forced(self):
        assert list(enumerate_syt((4,))) == [((1, 2, 3, 4),)]

    def test_lexicographic_by_row_of_entry(self):
        def row_sequence(tab):
            n = sum(len(r) for r in tab)
            rows = [0] * n
            for i, row in enumerate(tab):
                for v in row:
                    rows[v - 1] = i
            return rows

        for shape in [(3, 2), (2, 2, 1), (3, 3, 1)]:
            seqs = [row_sequence(t) for t in enumerate_syt(shape)]
            assert seqs == sorted(seqs)


class TestTranspose:
    def test_examples(self):
        assert transpose(((1, 2, 3),)) == ((1,), (2,), (3,))
        assert transpose(((1, 3), (2, 4))) == ((1, 2), (3, 4))

    def test_involution_all_small(self):
        for n in range(1, 7):
            for tab in all_syt(n):
                assert transpose(transpose(tab)) == tab
                assert validate_tableau(transpose(tab))


class TestPartitions:
    def test_exact_order_n4(self):
        assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_counts(self):
        expected = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22}
        for n, count in expected.items():
            assert len(list(partitions(n))) == count

    @given(st.integers(1, 9))
    def test_parts_sum(self, n):
        for shape in partitions(n):
            assert sum(shape) == n
            assert all(a >= b >= 1 for a, b in zip(shape, shape[1:]))
