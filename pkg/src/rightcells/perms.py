"""
Permutations of {1, ..., n} in one-line notation.

A permutation w is represented by the tuple (w(1), ..., w(n)) of 1-based
values.  All functions treat permutations as immutable values; results are
always plain tuples, so they can be shared freely across processes.

The text format is comma-separated values, e.g. "2,4,1,3,5".
"""
from __future__ import annotations

from bisect import bisect_left
from math import factorial
from typing import Iterator, Sequence


def validate_permutation(word: Sequence[int]) -> tuple[int, ...]:
    """
    Check that word is a bijection of {1..n} and return it as a tuple.

    >>> validate_permutation([2, 4, 1, 3, 5])
    (2, 4, 1, 3, 5)
    """
    word = tuple(word)
    n = len(word)
    if n == 0:
        raise ValueError("empty permutation")
    seen = [False] * n
    for v in word:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"non-integer entry {v!r}")
        if not 1 <= v <= n:
            raise ValueError(f"value {v} out of range 1..{n}")
        if seen[v - 1]:
            raise ValueError(f"duplicate value {v}")
        seen[v - 1] = True
    return word


def perm_from_text(text: str) -> tuple[int, ...]:
    """Parse the comma-separated format, e.g. "2,4,1,3,5"."""
    fields = text.split(",")
    values = []
    for field in fields:
        if not field.strip():
            raise ValueError(f"empty field in permutation text {text!r}")
        try:
            values.append(int(field))
        except ValueError:
            raise ValueError(f"non-integer field {field!r}") from None
    return validate_permutation(values)


def perm_to_text(word: Sequence[int]) -> str:
    return ",".join(map(str, word))


def inverse(word: Sequence[int]) -> tuple[int, ...]:
    """
    The inverse permutation: v with v[w[i]] = i (1-based).

    >>> inverse((2, 4, 1, 3, 5))
    (3, 1, 4, 2, 5)
    """
    inv = [0] * len(word)
    for i, v in enumerate(word):
        inv[v - 1] = i + 1
    return tuple(inv)


def is_involution(word: Sequence[int]) -> bool:
    """True iff the permutation is its own inverse."""
    return all(word[v - 1] == i + 1 for i, v in enumerate(word))


def validate_composition(parts: Sequence[int]) -> tuple[int, ...]:
    """Check that parts is a sequence of positive integers (a composition)."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("empty composition")
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"composition part {p!r} is not a positive integer")
    return parts


def sigma_c(parts: Sequence[int]) -> tuple[int, ...]:
    """
    The longest element of the Young subgroup S_{c_1} x ... x S_{c_k}:
    each consecutive block of the given sizes is reversed.

    >>> sigma_c((2, 1))
    (2, 1, 3)
    >>> sigma_c((3,))
    (3, 2, 1)
    """
    parts = validate_composition(parts)
    word: list[int] = []
    start = 1
    for p in parts:
        word.extend(range(start + p - 1, start - 1, -1))
        start += p
    return tuple(word)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """
    All 2^(n-1) compositions of n, in decreasing lexicographic order.

    >>> list(compositions(3))
    [(3,), (2, 1), (1, 2), (1, 1, 1)]
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def rec(m: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for first in range(m, 0, -1):
            for rest in rec(m - first):
                yield (first, *rest)

    return rec(n)


def lehmer_rank(word: Sequence[int]) -> int:
    """
    Rank of the permutation in lexicographic order, in 0..n!-1.

    >>> lehmer_rank((3, 2, 1))
    5
    """
    n = len(word)
    remaining = sorted(word)
    rank = 0
    for i, v in enumerate(word):
        j = bisect_left(remaining, v)
        rank += j * factorial(n - 1 - i)
        del remaining[j]
    return rank


def lehmer_unrank(n: int, rank: int) -> tuple[int, ...]:
    """
    The permutation of {1..n} with the given lexicographic rank.

    >>> lehmer_unrank(3, 0)
    (1, 2, 3)
    >>> lehmer_unrank(3, 5)
    (3, 2, 1)
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range 0..{n}!-1")
    remaining = list(range(1, n + 1))
    word = []
    for i in range(n - 1, -1, -1):
        f = factorial(i)
        digit, rank = divmod(rank, f)
        word.append(remaining.pop(digit))
    return tuple(word)


def iter_rank_range(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """
    Yield the permutations with Lehmer ranks lo, lo+1, ..., hi-1 in order.

    Seeds with lehmer_unrank(n, lo) and then takes lexicographic successor
    steps, so a full sweep costs far less than unranking every rank.
    """
    total = factorial(n)
    if not 0 <= lo <= hi <= total:
        raise ValueError(f"rank range [{lo}, {hi}) out of bounds for n={n}")
    if lo == hi:
        return
    word = list(lehmer_unrank(n, lo))
    yield tuple(word)
    for _ in range(hi - lo - 1):
        # standard next-permutation step
        i = n - 2
        while word[i] > word[i + 1]:
            i -= 1
        j = n - 1
        while word[j] < word[i]:
            j -= 1
        word[i], word[j] = word[j], word[i]
        word[i + 1 :] = word[:i:-1]
        yield tuple(word)


def lis(word: Sequence[int]) -> int:
    """
    Length of the longest strictly increasing subsequence, by patience
    sorting in O(n log n).

    >>> lis((2, 4, 1, 3, 5))
    3
    """
    tails: list[int] = []
    for v in word:
        j = bisect_left(tails, v)
        if j == len(tails):
            tails.append(v)
        else:
            tails[j] = v
    return len(tails)


def lds(word: Sequence[int]) -> int:
    """
    Length of the longest strictly decreasing subsequence.

    >>> lds((2, 4, 1, 3, 5))
    2
    """
    return lis([-v for v in word])
