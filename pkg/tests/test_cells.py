from math import factorial

import pytest

from rightcells.cells import (
    ALL_NONSMOOTH,
    ALL_SMOOTH,
    MIXED,
    all_smooth_cell_predicate,
    cell_elements,
    check_invariant_subsequence,
    classify_cell,
    prop6_has_smooth,
    section5_families,
    sufficient_nonsmooth_predicate,
    survey,
    theorem_main_predicate,
)
from rightcells.smoothness import is_smooth
from rightcells.tableaux import (
    partitions,
    enumerate_syt,
    rs_insert,
    shape_of,
    syt_count,
    validate_tableau,
)


def involution_count(n):
    a, b = 1, 1  # I(0), I(1)
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b if n >= 1 else a


class TestCellElements:
    def test_singleton(self):
        assert cell_elements(((1, 2, 3),)) == {(1, 2, 3)}

    def test_small_cells(self):
        assert cell_elements(((1, 3), (2,))) == {(2, 1, 3), (2, 3, 1)}
        assert cell_elements(((1, 3), (2, 4))) == {(2, 4, 1, 3), (2, 1, 4, 3)}

    def test_cells_are_fibers(self):
        for n in range(1, 7):
            for shape in partitions(n):
                for tab in enumerate_syt(shape):
                    members = cell_elements(tab)
                    assert len(members) == syt_count(shape)
                    assert all(rs_insert(w) == tab for w in members)


class TestClassifyCell:
    def test_all_smooth_cell(self):
        report = classify_cell(((1, 3), (2, 4)))
        assert report.classification == ALL_SMOOTH
        assert report.size == 2
        assert report.smooth_count == 2
        assert report.sample_nonsmooth is None

    def test_mixed_cell(self):
        report = classify_cell(((1, 2), (3, 4)))
        assert report.classification == MIXED
        assert report.size == 2
        assert report.smooth_count == 1
        assert report.sample_smooth == (3, 1, 4, 2)
        assert report.sample_nonsmooth == (3, 4, 1, 2)

    def test_hook_mixed_cell(self):
        assert classify_cell(((1, 3), (2,), (4,))).classification == MIXED

    def test_report_invariants(self):
        for n in range(1, 7):
            for shape in partitions(n):
                for tab in enumerate_syt(shape):
                    report = classify_cell(tab)
                    members = cell_elements(tab)
                    assert report.size == report.smooth_count + report.nonsmooth_count
                    assert report.size == syt_count(shape)
                    if report.sample_smooth is not None:
                        assert report.sample_smooth in members
                        assert is_smooth(report.sample_smooth)
                    if report.sample_nonsmooth is not None:
                        assert report.sample_nonsmooth in members
                        assert not is_smooth(report.sample_nonsmooth)
                    assert (report.smooth_count > 0) == (report.sample_smooth is not None)

    def test_rejects_invalid_tableau(self):
        with pytest.raises(ValueError):
            classify_cell(((1, 4), (3, 2)))


class TestSurvey:
    def test_n3(self):
        result = survey(3)
        assert len(result.cells) == 4
        assert result.totals == {ALL_SMOOTH: 4, ALL_NONSMOOTH: 0, MIXED: 0}

    def test_n4(self):
        result = survey(4)
        assert len(result.cells) == 10
        assert result.totals == {ALL_SMOOTH: 8, ALL_NONSMOOTH: 0, MIXED: 2}
        not_all_smooth = {
            c.tableau for c in result.cells if c.classification != ALL_SMOOTH
        }
        assert not_all_smooth == {((1, 2), (3, 4)), ((1, 3), (2,), (4,))}

    def test_n6_rectangle_is_all_nonsmooth(self):
        result = survey(6)
        by_tab = {c.tableau: c for c in result.cells}
        rect = by_tab[((1, 2, 3), (4, 5, 6))]
        assert rect.classification == ALL_NONSMOOTH
        assert rect.size == 5

    def test_streaming_matches_membership(self):
        # survey counters vs full BFS materialization, cell by cell
        for n in range(1, 7):
            by_tab = {c.tableau: c for c in survey(n).cells}
            for tab, report in by_tab.items():
                assert classify_cell(tab) == report

    def test_census_totals(self):
        for n in range(1, 8):
            result = survey(n)
            assert len(result.cells) == involution_count(n)
            assert sum(c.size for c in result.cells) == factorial(n)
            assert all(c.size == syt_count(c.shape) for c in result.cells)
            assert sorted(result.totals.values()) == sorted(
                [
                    sum(1 for c in result.cells if c.classification == k)
                    for k in (ALL_SMOOTH, ALL_NONSMOOTH, MIXED)
                ]
            )

    def test_sorted_by_shape_then_row_word(self):
        from rightcells.tableaux import row_word

        result = survey(5)
        keys = [
            (tuple(-p for p in c.shape), row_word(c.tableau)) for c in result.cells
        ]
        assert keys == sorted(keys)

    def test_jobs_do_not_change_result(self):
        base = survey(6, jobs=1)
        for jobs in (2, 3, 8):
            assert survey(6, jobs=jobs) == base

    def test_range_guard(self):
        with pytest.raises(ValueError):
            survey(0)
        with pytest.raises(ValueError):
            survey(11)
        assert survey(3, max_n=3).n == 3


class TestTheoremMainPredicate:
    @pytest.mark.parametrize(
        "rows,expected",
        [
            (((1, 3), (2, 4)), True),
            (((1, 2), (3, 4)), False),
            (((1, 2, 5), (3,), (4,)), True),
            (((1, 2, 4), (3,), (5,)), False),
            (((1,),), True),
            (((1, 2), (3,)), True),
            (((1,), (2,)), True),
            (((1, 2, 3, 4),), True),
        ],
    )
    def test_examples(self, rows, expected):
        assert theorem_main_predicate(rows) == expected

    def test_single_column_hook(self):
        assert theorem_main_predicate(((1,), (2,), (3,), (4,)))

    def test_two_column_hook_cases(self):
        # first row (1,2) and (1,n) qualify; interior k does not
        assert theorem_main_predicate(((1, 2), (3,), (4,), (5,)))
        assert theorem_main_predicate(((1, 5), (2,), (3,), (4,)))
        assert not theorem_main_predicate(((1, 3), (2,), (4,), (5,)))

    def test_corrected_differs_only_on_two_row_case(self):
        # the original family (2, k) for k < n over-claims; the corrected
        # predicate keeps only (2, n)
        assert theorem_main_predicate(((1, 3, 5), (2, 4)))
        assert not all_smooth_cell_predicate(((1, 3, 5), (2, 4)))
        assert all_smooth_cell_predicate(((1, 3, 4), (2, 5)))
        for n in range(1, 7):
            for shape in partitions(n):
                if len(shape) == 2 and shape[1] == 2 and shape[0] == n - 2:
                    continue
                for tab in enumerate_syt(shape):
                    assert theorem_main_predicate(tab) == all_smooth_cell_predicate(tab)

    def test_corrected_predicate_matches_census(self):
        for n in range(1, 8):
            for cell in survey(n).cells:
                assert all_smooth_cell_predicate(cell.tableau) == (
                    cell.classification == ALL_SMOOTH
                )


class TestInvariantSubsequence:
    def test_rectangle_invariant(self):
        assert check_invariant_subsequence(((1, 2, 3), (4, 5, 6)), (4, 5, 2, 3))

    def test_singleton(self):
        assert check_invariant_subsequence(((1, 2, 3),), (1, 2, 3))

    def test_not_invariant(self):
        assert not check_invariant_subsequence(((1, 2), (3, 4)), (3, 4, 1, 2))

    def test_rejects_bad_values(self):
        with pytest.raises(ValueError):
            check_invariant_subsequence(((1, 2), (3, 4)), (3, 3))
        with pytest.raises(ValueError):
            check_invariant_subsequence(((1, 2), (3, 4)), (3, 9))


class TestSection5Families:
    def test_k3_members(self):
        families = dict(section5_families(3))
        assert families[((1, 2, 3), (4, 5, 6))] == (4, 5, 2, 3)
        assert families[((1, 2, 3, 4), (5, 6, 7))] == (5, 6, 3, 4)
        assert families[((1, 2, 3, 7), (4, 5, 6))] == (4, 5, 2, 3)
        assert families[((1, 2, 3), (4, 5, 6), (7,))] == (4, 5, 2, 3)
        assert families[((1, 2), (3, 4), (5, 6))] == (5, 3, 4, 2)

    def test_k4_rectangle(self):
        families = dict(section5_families(4))
        assert families[((1, 2, 3, 4), (5, 6, 7, 8))] == (5, 6, 3, 4)

    def test_two_column_family_only_for_odd_k(self):
        assert len(section5_families(3)) == 5
        assert len(section5_families(4)) == 4
        assert len(section5_families(5)) == 5

    def test_all_families_are_standard(self):
        for k in (3, 4, 5, 6):
            for tab, seq in section5_families(k):
                assert validate_tableau(tab) == tab
                assert len(seq) == 4

    def test_k_below_3_rejected(self):
        with pytest.raises(ValueError):
            section5_families(2)


class TestSufficientNonsmooth:
    @pytest.mark.parametrize(
        "rows,expected",
        [
            (((1, 2, 3), (4, 5, 6)), True),
            (((1, 3), (2, 4)), False),
            (((1, 2, 3, 4), (5, 6)), False),
        ],
    )
    def test_examples(self, rows, expected):
        assert sufficient_nonsmooth_predicate(rows) == expected

    def test_requires_two_rows(self):
        with pytest.raises(ValueError):
            sufficient_nonsmooth_predicate(((1, 2, 3),))

    def test_implies_all_nonsmooth_small(self):
        for n in range(4, 9):
            for b in range(1, n // 2 + 1):
                for tab in enumerate_syt((n - b, b)):
                    if sufficient_nonsmooth_predicate(tab):
                        assert classify_cell(tab).classification == ALL_NONSMOOTH


class TestProp6:
    @pytest.mark.parametrize(
        "rows,expected",
        [
            (((1, 4), (2, 5), (3,)), True),
            (((1, 3), (2, 4), (5,), (6,)), True),
            (((1, 3), (2, 5), (4,), (6,)), False),
        ],
    )
    def test_examples(self, rows, expected):
        assert prop6_has_smooth(rows) == expected

    def test_requires_two_columns(self):
        with pytest.raises(ValueError):
            prop6_has_smooth(((1, 2, 3), (4, 5, 6)))
        with pytest.raises(ValueError):
            prop6_has_smooth(((1,), (2,)))

    def test_sufficiency_small(self):
        for n in range(2, 9):
            for a in range(1, n // 2 + 1):
                shape = (2,) * a + (1,) * (n - 2 * a)
                for tab in enumerate_syt(shape):
                    if prop6_has_smooth(tab):
                        assert classify_cell(tab).smooth_count >= 1
