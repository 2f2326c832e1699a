"""
Named verification checks: each sweeps a statement about cells or
smoothness against brute force and reports PASS or FAIL with the first
counterexample.  These back the `verify` subcommands of the CLI.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, Optional, Sequence

from .cells import (
    ALL_NONSMOOTH,
    ALL_SMOOTH,
    MIXED,
    CellReport,
    SurveyResult,
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
from .knuth import knuth_class, knuth_neighbors
from .perms import inverse, is_involution
from .smoothness import (
    PATTERN_3412,
    PATTERN_4231,
    contains_pattern,
    is_smooth,
    is_smooth_oracle,
    smooth_involutions,
)
from .tableaux import (
    Tableau,
    enumerate_syt,
    rs_insert,
    shape_of,
    syt_count,
    tableau_to_text,
    validate_tableau,
)

REMARK_WORD = (6, 7, 3, 4, 1, 2, 5)
REMARK_PARTNER = (3, 6, 4, 7, 1, 5, 2)


@dataclass(frozen=True)
class VerificationOutcome:
    """Result of one named check; FAIL always carries a counterexample."""

    check: str
    params: dict
    status: str
    detail: str
    counterexample: Optional[str]
    elapsed: float

    @property
    def passed(self) -> bool:
        return self.status == "PASS"


def _outcome(check, params, start, ok, detail, counterexample=None):
    return VerificationOutcome(
        check=check,
        params=params,
        status="PASS" if ok else "FAIL",
        detail=detail,
        counterexample=None if ok else counterexample,
        elapsed=time.perf_counter() - start,
    )


def _describe_cell(report: CellReport) -> str:
    parts = [
        f"tableau {tableau_to_text(report.tableau)}:",
        f"size={report.size}",
        f"smooth={report.smooth_count}",
        f"nonsmooth={report.nonsmooth_count}",
        f"classification={report.classification}",
    ]
    if report.sample_nonsmooth is not None:
        parts.append(f"sample_nonsmooth={','.join(map(str, report.sample_nonsmooth))}")
    return " ".join(parts)


def check_theorem_main(
    n: int,
    jobs: int = 1,
    result: Optional[SurveyResult] = None,
    corrected: bool = False,
) -> VerificationOutcome:
    """
    Sweep the census of S_n and test that ALL_SMOOTH cells are exactly
    the predicate cells.  With corrected=False this uses the original
    family list (second row (2, k) for every k), which brute force
    refutes for n >= 5; corrected=True uses the repaired predicate,
    exact for n <= 10.
    """
    start = time.perf_counter()
    predicate = all_smooth_cell_predicate if corrected else theorem_main_predicate
    name = "theorem-main-corrected" if corrected else "theorem-main"
    if result is None or result.n != n:
        result = survey(n, jobs=jobs)
    n_smooth = n_pred = 0
    counterexample = None
    for cell in result.cells:
        is_all_smooth = cell.classification == ALL_SMOOTH
        claimed = predicate(cell.tableau)
        n_smooth += is_all_smooth
        n_pred += claimed
        if is_all_smooth != claimed and counterexample is None:
            counterexample = _describe_cell(cell) + (
                " (predicate claims all-smooth)" if claimed else " (predicate misses it)"
            )
    detail = f"cells={len(result.cells)} all_smooth={n_smooth} predicate={n_pred}"
    return _outcome(name, {"n": n}, start, counterexample is None, detail, counterexample)


def check_hohlweg(n: int) -> VerificationOutcome:
    """
    Compare the blockwise-reversal construction of smooth involutions
    against an independent brute-force sweep of S_n.
    """
    start = time.perf_counter()
    constructed = smooth_involutions(n)
    brute = {
        w
        for w in permutations(range(1, n + 1))
        if is_involution(w) and is_smooth_oracle(w)
    }
    ok = constructed == brute and len(constructed) == 2 ** (n - 1)
    detail = f"constructed={len(constructed)} brute={len(brute)} expected={2 ** (n - 1)}"
    diff = sorted(constructed.symmetric_difference(brute))
    counterexample = f"symmetric difference starts with {diff[:3]}" if diff else (
        f"cardinality {len(constructed)} != 2^(n-1)"
    )
    return _outcome("hohlweg", {"n": n}, start, ok, detail, counterexample)


def check_inverse_smooth(n: int) -> VerificationOutcome:
    """is_smooth(w) agrees with is_smooth(w^-1) across all of S_n."""
    start = time.perf_counter()
    for w in permutations(range(1, n + 1)):
        if is_smooth(w) != is_smooth(inverse(w)):
            return _outcome(
                "inverse-smooth",
                {"n": n},
                start,
                False,
                "symmetry under inversion",
                f"w={w} smooth={is_smooth(w)} but inverse={inverse(w)} differs",
            )
    return _outcome(
        "inverse-smooth", {"n": n}, start, True, f"checked={factorial(n)}", None
    )


def check_knuth_vs_rsk(n: int) -> VerificationOutcome:
    """
    Group S_n into insertion-tableau fibers and test that each fiber is
    exactly one Knuth class of the expected hook-length size.
    """
    start = time.perf_counter()
    fibers: dict[Tableau, set] = {}
    for w in permutations(range(1, n + 1)):
        fibers.setdefault(rs_insert(w), set()).add(w)
    for tab, fiber in fibers.items():
        rep = min(fiber)
        cls = knuth_class(rep)
        if cls != fiber:
            return _outcome(
                "knuth-vs-rsk",
                {"n": n},
                start,
                False,
                "fiber equality",
                f"tableau {tableau_to_text(tab)}: class size {len(cls)} vs fiber size {len(fiber)}",
            )
        if len(fiber) != syt_count(shape_of(tab)):
            return _outcome(
                "knuth-vs-rsk",
                {"n": n},
                start,
                False,
                "fiber size",
                f"tableau {tableau_to_text(tab)}: fiber size {len(fiber)} != hook count",
            )
    return _outcome("knuth-vs-rsk", {"n": n}, start, True, f"fibers={len(fibers)}", None)


def check_lemma_relative_order(n: int) -> VerificationOutcome:
    """
    Knuth moves never exchange the relative position of consecutive
    values i and i+1, across all of S_n and all single moves.
    """
    start = time.perf_counter()
    checked = 0
    for w in permutations(range(1, n + 1)):
        pos_w = inverse(w)
        for v in knuth_neighbors(w):
            checked += 1
            pos_v = inverse(v)
            for i in range(1, n):
                if (pos_w[i - 1] < pos_w[i]) != (pos_v[i - 1] < pos_v[i]):
                    return _outcome(
                        "lemma-relative-order",
                        {"n": n},
                        start,
                        False,
                        "relative order of consecutive values",
                        f"w={w} neighbor={v} values {i},{i + 1} swapped order",
                    )
    return _outcome(
        "lemma-relative-order", {"n": n}, start, True, f"moves={checked}", None
    )


def check_oracle_equivalence(
    n: int, samples: int = 10000, sample_n: int = 12, seed: int = 1729
) -> VerificationOutcome:
    """
    is_smooth agrees with is_smooth_oracle on all of S_n and on seeded
    random samples from S_sample_n.
    """
    start = time.perf_counter()
    for w in permutations(range(1, n + 1)):
        if is_smooth(w) != is_smooth_oracle(w):
            return _outcome(
                "oracle-equivalence",
                {"n": n, "samples": samples, "sample_n": sample_n, "seed": seed},
                start,
                False,
                "exhaustive sweep",
                f"w={w} fast={is_smooth(w)} oracle={is_smooth_oracle(w)}",
            )
    rng = random.Random(seed)
    base = list(range(1, sample_n + 1))
    for _ in range(samples):
        rng.shuffle(base)
        if is_smooth(base) != is_smooth_oracle(base):
            return _outcome(
                "oracle-equivalence",
                {"n": n, "samples": samples, "sample_n": sample_n, "seed": seed},
                start,
                False,
                "random sample",
                f"w={tuple(base)} fast={is_smooth(base)} oracle={is_smooth_oracle(base)}",
            )
    return _outcome(
        "oracle-equivalence",
        {"n": n, "samples": samples, "sample_n": sample_n, "seed": seed},
        start,
        True,
        f"exhaustive={factorial(n)} sampled={samples}",
        None,
    )


def two_row_shapes(n: int) -> Iterator[tuple[int, int]]:
    for b in range(1, n // 2 + 1):
        yield (n - b, b)


def two_column_shapes(n: int) -> Iterator[tuple[int, ...]]:
    for a in range(1, n // 2 + 1):
        yield (2,) * a + (1,) * (n - 2 * a)


def _occurrence_value_sets_4231(word: Sequence[int]) -> set[frozenset[int]]:
    out = set()
    for a, b, c, d in combinations(word, 4):
        if d < b < c < a:
            out.add(frozenset((a, b, c, d)))
    return out


def section6_mixed_family(n: int) -> Iterator[Tableau]:
    """
    Two-column tableaux with first row (1, 2), second row (3, c) and the
    remaining values as single-entry rows, for 4 <= c < n.  The bottom of
    the first column is then n > c, and 3 < c sits in the first column,
    so both hypotheses of the mixed-cell statement hold automatically.
    """
    for c in range(4, n):
        rest = [v for v in range(4, n + 1) if v != c]
        yield validate_tableau([(1, 2), (3, c)] + [(v,) for v in rest])


def check_section5(n: int, ks: Sequence[int] = (3, 4)) -> VerificationOutcome:
    """
    The invariant-subsequence certificates: every family tableau for the
    given k values is all-non-smooth with its quadruple present in every
    member; every two-row tableau of size <= n passing the sufficient
    condition is all-non-smooth; and the S_7 cell of the remark instance
    is all-non-smooth yet admits no common 4231 value set between the two
    named members.
    """
    start = time.perf_counter()
    params = {"n": n, "k": tuple(ks)}
    families = checked = 0
    for k in ks:
        for tab, seq in section5_families(k):
            families += 1
            validate_tableau(tab)
            ranks = tuple(sorted(seq).index(v) + 1 for v in seq)
            if ranks not in (PATTERN_3412, PATTERN_4231):
                return _outcome(
                    "section5", params, start, False, "family invariant",
                    f"k={k} sequence {seq} is not a 3412 or 4231 quadruple",
                )
            report = classify_cell(tab)
            if report.classification != ALL_NONSMOOTH:
                return _outcome(
                    "section5", params, start, False, "family classification",
                    f"k={k} " + _describe_cell(report),
                )
            if not check_invariant_subsequence(tab, seq):
                return _outcome(
                    "section5", params, start, False, "family invariant",
                    f"k={k} tableau {tableau_to_text(tab)}: {seq} not invariant",
                )
    for m in range(4, n + 1):
        for shape in two_row_shapes(m):
            for tab in enumerate_syt(shape):
                if not sufficient_nonsmooth_predicate(tab):
                    continue
                checked += 1
                report = classify_cell(tab)
                if report.classification != ALL_NONSMOOTH:
                    return _outcome(
                        "section5", params, start, False, "sufficient condition",
                        _describe_cell(report),
                    )
    remark = classify_cell(rs_insert(REMARK_WORD))
    members = cell_elements(rs_insert(REMARK_WORD))
    if remark.classification != ALL_NONSMOOTH:
        return _outcome(
            "section5", params, start, False, "remark cell", _describe_cell(remark)
        )
    if not any(not contains_pattern(w, PATTERN_3412) for w in members):
        return _outcome(
            "section5", params, start, False, "remark cell",
            "no member avoids 3412",
        )
    if REMARK_PARTNER not in members:
        return _outcome(
            "section5", params, start, False, "remark cell",
            f"{REMARK_PARTNER} not Knuth equivalent to {REMARK_WORD}",
        )
    common = _occurrence_value_sets_4231(REMARK_WORD) & _occurrence_value_sets_4231(
        REMARK_PARTNER
    )
    if common:
        return _outcome(
            "section5", params, start, False, "remark cell",
            f"common 4231 value sets: {sorted(map(sorted, common))}",
        )
    detail = f"families={families} sufficient_condition_tableaux={checked} remark_cell_size={remark.size}"
    return _outcome("section5", params, start, True, detail, None)


def check_section6(n: int) -> VerificationOutcome:
    """
    Two-column statements: the smooth-member condition always finds a
    smooth member, and every mixed-family tableau classifies MIXED.
    """
    start = time.perf_counter()
    predicate_true = instances = 0
    for m in range(2, n + 1):
        for shape in two_column_shapes(m):
            for tab in enumerate_syt(shape):
                if not prop6_has_smooth(tab):
                    continue
                predicate_true += 1
                report = classify_cell(tab)
                if report.smooth_count < 1:
                    return _outcome(
                        "section6", {"n": n}, start, False,
                        "smooth-member condition", _describe_cell(report),
                    )
    for m in range(5, n + 1):
        for tab in section6_mixed_family(m):
            instances += 1
            report = classify_cell(tab)
            if report.classification != MIXED:
                return _outcome(
                    "section6", {"n": n}, start, False,
                    "mixed family", _describe_cell(report),
                )
    detail = f"smooth_condition_tableaux={predicate_true} mixed_family_instances={instances}"
    return _outcome("section6", {"n": n}, start, True, detail, None)
