"""
Pattern containment and the smoothness criterion for Schubert varieties.

A permutation is smooth exactly when it avoids both 3412 and 4231.  Two
detection routes are kept deliberately independent: specialized quadratic
scans per pattern (the fast path used by the census) and an exhaustive
scan of all 4-element subsequences (the oracle).  Tests require the two
routes to agree exhaustively on small symmetric groups and on seeded
random samples.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .perms import compositions, sigma_c

PATTERN_3412 = (3, 4, 1, 2)
PATTERN_4231 = (4, 2, 3, 1)


@dataclass(frozen=True)
class PatternOccurrence:
    """A pattern occurrence: 1-based positions whose values realize it."""

    positions: tuple[int, ...]
    pattern: tuple[int, ...]


def _ranks(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return tuple(ranks)


def contains_pattern(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    Whether some subsequence of word is order-isomorphic to pattern.
    Exhaustive scan over all subsequences of the pattern's length.
    """
    k = len(pattern)
    if k > len(word):
        raise ValueError(f"pattern of length {k} longer than word of length {len(word)}")
    target = _ranks(pattern)
    for combo in combinations(word, k):
        if _ranks(combo) == target:
            return True
    return False


def contains_4231(word: Sequence[int]) -> bool:
    """
    Quadratic-time scan for a 4231 occurrence.

    An occurrence a..b..c..d with d < b < c < a can always take a as the
    running prefix maximum before b and d as the running suffix minimum
    after c, so it suffices to find positions j < k with
    max(w[:j]) > w[k] > w[j] > min(w[k+1:]).
    """
    n = len(word)
    if n < 4:
        return False
    sufmin = [0] * n
    m = n + 1
    for k in range(n - 1, -1, -1):
        sufmin[k] = m
        if word[k] < m:
            m = word[k]
    amax = word[0]
    for j in range(1, n - 2):
        b = word[j]
        if amax > b:
            for k in range(j + 1, n - 1):
                c = word[k]
                if b < c < amax and sufmin[k] < b:
                    return True
        if b > amax:
            amax = b
    return False


def contains_3412(word: Sequence[int]) -> bool:
    """
    Quadratic-time scan for a 3412 occurrence.

    For positions j < k playing the 4 and the 1, the best 3 is the largest
    prefix value below w[j] and the best 2 is the smallest suffix value
    above w[k]; an occurrence exists iff some such pair has best3 > best2.
    """
    n = len(word)
    if n < 4:
        return False
    run_a = 0
    for p in range(1, n - 1):
        if run_a > 1:
            wp = word[p]
            d = n + 1
            for l in range(p + 1, n):
                v = word[l]
                if wp < v < d:
                    d = v
            if d < run_a:
                return True
        wp = word[p]
        a = 0
        for i in range(p):
            v = word[i]
            if a < v < wp:
                a = v
        if a > run_a:
            run_a = a
    return False


def is_smooth(word: Sequence[int]) -> bool:
    """
    Whether the permutation avoids both 3412 and 4231 (the pattern
    criterion for smoothness of the Schubert variety).  Fast path; must
    agree with is_smooth_oracle.
    """
    return not contains_4231(word) and not contains_3412(word)


def is_smooth_oracle(word: Sequence[int]) -> bool:
    """
    Reference implementation of is_smooth by exhaustive scan of all
    4-element subsequences, independent of the quadratic scans.
    """
    for a, b, c, d in combinations(word, 4):
        if c < d < a < b or d < b < c < a:
            return False
    return True


def smoothness_witness(word: Sequence[int]) -> Optional[PatternOccurrence]:
    """
    None iff word avoids both 3412 and 4231; otherwise the first
    occurrence of either pattern, scanning position 4-subsets in
    lexicographic order.  Positions are 1-based.
    """
    n = len(word)
    for idx in combinations(range(n), 4):
        a, b, c, d = (word[i] for i in idx)
        if c < d < a < b:
            return PatternOccurrence(tuple(i + 1 for i in idx), PATTERN_3412)
        if d < b < c < a:
            return PatternOccurrence(tuple(i + 1 for i in idx), PATTERN_4231)
    return None


def smooth_involutions(n: int) -> set[tuple[int, ...]]:
    """
    The blockwise reversals sigma_c over all compositions c of n.  These
    are exactly the smooth involutions; the census tooling verifies that
    against an independent brute-force sweep.
    """
    return {sigma_c(c) for c in compositions(n)}
