"""
Right-cell census of the symmetric group.

Each cell is the fiber of one standard tableau under insertion, so cells
are keyed by the tableau itself.  The survey streams every permutation of
S_n in Lehmer-rank (= lexicographic) order, accumulating per-tableau
counters and first-seen samples without ever materializing cell member
lists; disjoint rank ranges can be processed in parallel worker processes
and merged, and the final sort makes the output independent of scheduling.

On-demand queries about a single cell (classify_cell, cell_elements) go
the other way: breadth-first closure under Knuth moves, whose size is
bounded by the tableau count of the shape.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat
from math import factorial
from typing import Optional, Sequence

from .knuth import knuth_class
from .perms import iter_rank_range
from .smoothness import is_smooth
from .tableaux import Tableau, row_word, rs_insert, shape_of, validate_tableau

ALL_SMOOTH = "ALL_SMOOTH"
ALL_NONSMOOTH = "ALL_NONSMOOTH"
MIXED = "MIXED"

DEFAULT_MAX_N = 10


@dataclass(frozen=True)
class CellReport:
    """Census record for one cell."""

    tableau: Tableau
    shape: tuple[int, ...]
    size: int
    smooth_count: int
    nonsmooth_count: int
    classification: str
    sample_smooth: Optional[tuple[int, ...]]
    sample_nonsmooth: Optional[tuple[int, ...]]


@dataclass(frozen=True)
class SurveyResult:
    """Full census of S_n: one CellReport per cell plus aggregate totals."""

    n: int
    cells: tuple[CellReport, ...]
    totals: dict[str, int]


def _classification(smooth_count: int, size: int) -> str:
    if smooth_count == size:
        return ALL_SMOOTH
    if smooth_count == 0:
        return ALL_NONSMOOTH
    return MIXED


def cell_elements(tab: Tableau) -> set[tuple[int, ...]]:
    """All members of the cell of tab: the Knuth closure of its row word."""
    return knuth_class(row_word(tab))


def classify_cell(tab: Tableau) -> CellReport:
    """
    Classify one cell by materializing its members.  Samples are the
    lexicographically least members of each kind, matching the rank-order
    tie-break used by the streaming survey.
    """
    tab = validate_tableau(tab)
    smooth_count = 0
    sample_smooth = None
    sample_nonsmooth = None
    members = sorted(cell_elements(tab))
    for w in members:
        if is_smooth(w):
            smooth_count += 1
            if sample_smooth is None:
                sample_smooth = w
        elif sample_nonsmooth is None:
            sample_nonsmooth = w
    size = len(members)
    return CellReport(
        tableau=tab,
        shape=shape_of(tab),
        size=size,
        smooth_count=smooth_count,
        nonsmooth_count=size - smooth_count,
        classification=_classification(smooth_count, size),
        sample_smooth=sample_smooth,
        sample_nonsmooth=sample_nonsmooth,
    )


def _survey_range(n: int, lo: int, hi: int) -> dict:
    """
    Accumulate counters over the permutations with ranks in [lo, hi).
    Entry layout per tableau: [size, smooth_count, sample_smooth,
    sample_nonsmooth]; samples are first-seen, hence range-minimal.
    """
    acc: dict = {}
    get = acc.get
    for w in iter_rank_range(n, lo, hi):
        tab = rs_insert(w)
        smooth = is_smooth(w)
        entry = get(tab)
        if entry is None:
            if smooth:
                acc[tab] = [1, 1, w, None]
            else:
                acc[tab] = [1, 0, None, w]
        else:
            entry[0] += 1
            if smooth:
                entry[1] += 1
                if entry[2] is None:
                    entry[2] = w
            elif entry[3] is None:
                entry[3] = w
    return acc


def _merge_into(acc: dict, part: dict) -> None:
    """Commutative merge: counters add, samples take the lexicographic min."""
    for tab, entry in part.items():
        cur = acc.get(tab)
        if cur is None:
            acc[tab] = entry
            continue
        cur[0] += entry[0]
        cur[1] += entry[1]
        for i in (2, 3):
            if entry[i] is not None and (cur[i] is None or entry[i] < cur[i]):
                cur[i] = entry[i]


def survey(n: int, jobs: int = 1, max_n: int = DEFAULT_MAX_N) -> SurveyResult:
    """
    Census of all of S_n.  With jobs > 1 the rank space is split into that
    many contiguous ranges processed by worker processes; the result is
    identical for every jobs value.
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n={n} outside the configured range 1..{max_n}")
    total = factorial(n)
    jobs = max(1, jobs)
    if jobs == 1 or total <= jobs:
        acc = _survey_range(n, 0, total)
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        acc = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(
                _survey_range, repeat(n), bounds[:-1], bounds[1:]
            ):
                _merge_into(acc, part)

    cells = []
    totals = {ALL_SMOOTH: 0, ALL_NONSMOOTH: 0, MIXED: 0}
    order = sorted(
        acc, key=lambda tab: (tuple(-p for p in shape_of(tab)), row_word(tab))
    )
    for tab in order:
        size, smooth_count, sample_smooth, sample_nonsmooth = acc[tab]
        report = CellReport(
            tableau=tab,
            shape=shape_of(tab),
            size=size,
            smooth_count=smooth_count,
            nonsmooth_count=size - smooth_count,
            classification=_classification(smooth_count, size),
            sample_smooth=sample_smooth,
            sample_nonsmooth=sample_nonsmooth,
        )
        totals[report.classification] += 1
        cells.append(report)
    return SurveyResult(n=n, cells=tuple(cells), totals=totals)


def _hook_with_interval_column(tab: Tableau, shape: tuple[int, ...]) -> bool:
    """Hook shape whose first-column entries below the top-left box are
    consecutive; single rows and single columns count (empty interval)."""
    if any(p != 1 for p in shape[1:]):
        return False
    below = [row[0] for row in tab[1:]]
    return all(b - a == 1 for a, b in zip(below, below[1:]))


def theorem_main_predicate(tab: Tableau) -> bool:
    """
    Whether tab belongs to one of the families claimed to consist of
    smooth permutations only: a hook with a consecutive below-corner
    column, or a two-row shape (n-2, 2) whose second row starts with 2.
    The two-row family over-claims for second row (2, k) with k < n; see
    all_smooth_cell_predicate.
    """
    shape = shape_of(tab)
    if len(shape) == 2 and shape[1] == 2:
        return tab[1][0] == 2
    return _hook_with_interval_column(tab, shape)


def all_smooth_cell_predicate(tab: Tableau) -> bool:
    """
    Corrected closed form for the all-smooth cells, exact against brute
    force for n <= 10: the hook families of theorem_main_predicate plus,
    among the (n-2, 2) shapes, only the tableau whose second row is
    (2, n).  For any k < n the cell of the second-row-(2, k) tableau
    contains a 3412 occurrence; the smallest witness is (2, 4, 5, 1, 3)
    in the cell of 1,3,5|2,4.
    """
    shape = shape_of(tab)
    if len(shape) == 2 and shape[1] == 2:
        return tab[1] == (2, sum(shape))
    return _hook_with_interval_column(tab, shape)


def check_invariant_subsequence(tab: Tableau, seq: Sequence[int]) -> bool:
    """
    Whether every member of the cell of tab contains the values of seq in
    exactly the given left-to-right order.
    """
    n = sum(shape_of(tab))
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise ValueError("sequence values must be distinct")
    if not all(isinstance(v, int) and 1 <= v <= n for v in seq):
        raise ValueError(f"sequence values must lie in 1..{n}")
    for w in cell_elements(tab):
        pos = {v: i for i, v in enumerate(w)}
        idx = [pos[v] for v in seq]
        if any(a > b for a, b in zip(idx, idx[1:])):
            return False
    return True


def section5_families(k: int) -> list[tuple[Tableau, tuple[int, ...]]]:
    """
    The tableau families certified all-non-smooth by an invariant
    subsequence, paired with that subsequence.

    Four families carry a 3412 quadruple anchored at the second-row block:
    the 2xk rectangle, the (k+1, k) pair, and the two one-box extensions
    of the rectangle (extra box at the end of row one, or as a third row).
    The fifth is the two-column tableau with three consecutive full rows
    (k-2, k-1), (k, k+1), (k+2, k+3), carrying a 4231 quadruple; it only
    exists for odd k, since the values 1..k-3 must fill whole rows above.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    row1 = tuple(range(1, k + 1))
    row2 = tuple(range(k + 1, 2 * k + 1))
    quad = (k + 1, k + 2, k - 1, k)
    families = [
        ((row1, row2), quad),
        (
            (tuple(range(1, k + 2)), tuple(range(k + 2, 2 * k + 2))),
            (k + 2, k + 3, k, k + 1),
        ),
        ((row1 + (2 * k + 1,), row2), quad),
        ((row1, row2, (2 * k + 1,)), quad),
    ]
    if k % 2 == 1:
        rows = [(v, v + 1) for v in range(1, k - 2, 2)]
        rows += [(k - 2, k - 1), (k, k + 1), (k + 2, k + 3)]
        families.append((tuple(rows), (k + 2, k, k + 1, k - 1)))
    return families


def sufficient_nonsmooth_predicate(tab: Tableau) -> bool:
    """
    Sufficient condition for a cell to be all-non-smooth: the second row
    is a block of consecutive values (k+1, ..., k+m) and k+m-2 exceeds
    the first-row length.
    """
    if len(tab) < 2:
        raise ValueError("tableau must have at least two rows")
    second = tab[1]
    k = second[0] - 1
    if any(second[j] != k + 1 + j for j in range(len(second))):
        return False
    return k + len(second) - 2 > len(tab[0])


def prop6_has_smooth(tab: Tableau) -> bool:
    """
    Sufficient condition for a two-column cell to contain a smooth
    member.  With b the top entry of column two, a the bottom entry of
    column one and D the column-two entries below b: either every entry
    of D exceeds a, or, taking d the largest entry of D below a, no
    column-one entry lies strictly between b and d.
    """
    if len(tab[0]) != 2:
        raise ValueError("tableau must have exactly two columns")
    col1 = [row[0] for row in tab]
    col2 = [row[1] for row in tab if len(row) > 1]
    b = col2[0]
    a = col1[-1]
    below_a = [v for v in col2[1:] if v < a]
    if not below_a:
        return True
    d = max(below_a)
    return all(v < b for v in col1 if v < d)
