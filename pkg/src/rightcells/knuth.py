"""
Knuth moves on permutations and the equivalence classes they generate.

A Knuth move rewrites three consecutive letters: with x < y < z,

  first kind:   (y, x, z) <-> (y, z, x)
  second kind:  (x, z, y) <-> (z, x, y)

Both directions of both kinds are treated as neighbors, so the relation is
symmetric.  The classes coincide with the fibers of the insertion map
(rows of equal insertion tableau), which is what makes them the right
cells of the symmetric group; that equality is verified exhaustively in
the test suite rather than assumed anywhere.
"""
from __future__ import annotations

from typing import Sequence

from .tableaux import rs_insert


def knuth_neighbors(word: Sequence[int]) -> set[tuple[int, ...]]:
    """
    All permutations one Knuth move away.

    >>> sorted(knuth_neighbors((2, 1, 3)))
    [(2, 3, 1)]
    """
    word = tuple(word)
    out: set[tuple[int, ...]] = set()
    for i in range(len(word) - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if min(b, c) < a < max(b, c):
            out.add(word[:i] + (a, c, b) + word[i + 3 :])
        if min(a, b) < c < max(a, b):
            out.add(word[:i] + (b, a, c) + word[i + 3 :])
    return out


def knuth_class(word: Sequence[int]) -> set[tuple[int, ...]]:
    """
    The full Knuth equivalence class of word: the connected component
    under knuth_neighbors, computed by breadth-first search.
    """
    start = tuple(word)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for v in knuth_neighbors(w):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def knuth_equivalent(x: Sequence[int], y: Sequence[int]) -> bool:
    """
    Whether x and y are Knuth equivalent, decided by comparing insertion
    tableaux.  The BFS closure is the independent cross-check used in
    tests.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return rs_insert(x) == rs_insert(y)
