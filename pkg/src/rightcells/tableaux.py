"""
Standard Young tableaux and the Robinson-Schensted insertion map.

A tableau is a tuple of rows, each row a tuple of 1-based entries; a shape
is a weakly decreasing tuple of positive row lengths.  The canonical text
encoding joins rows with '|' and entries with ',', e.g. "1,3,5|2,4"; it is
the cell key used throughout the census code.
"""
from __future__ import annotations

from bisect import bisect_left
from math import factorial
from typing import Iterator, Sequence

Tableau = tuple[tuple[int, ...], ...]


def validate_shape(rows: Sequence[int]) -> tuple[int, ...]:
    """Check that rows is a weakly decreasing sequence of positive lengths."""
    shape = tuple(rows)
    if not shape:
        raise ValueError("empty shape")
    for p in shape:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"shape part {p!r} is not a positive integer")
    for i in range(len(shape) - 1):
        if shape[i] < shape[i + 1]:
            raise ValueError(f"shape {shape} is not weakly decreasing")
    return shape


def validate_tableau(rows: Sequence[Sequence[int]]) -> Tableau:
    """
    Check the standard-tableau invariants and return the canonical tuple
    form.  Reports the first violated invariant: entry set, row order,
    column order, then shape.
    """
    tab = tuple(tuple(row) for row in rows)
    n = sum(len(row) for row in tab)
    if n == 0:
        raise ValueError("empty tableau")
    seen = [False] * n
    for row in tab:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"non-integer entry {v!r}")
            if not 1 <= v <= n:
                raise ValueError(f"entry {v} out of range 1..{n}")
            if seen[v - 1]:
                raise ValueError(f"duplicate entry {v}")
            seen[v - 1] = True
    for i, row in enumerate(tab):
        for j in range(len(row) - 1):
            if row[j] >= row[j + 1]:
                raise ValueError(f"row {i + 1} not increasing")
    for i in range(len(tab) - 1):
        upper, lower = tab[i], tab[i + 1]
        for j in range(min(len(upper), len(lower))):
            if upper[j] >= lower[j]:
                raise ValueError(f"column {j + 1} not increasing")
    validate_shape([len(row) for row in tab])
    return tab


def tableau_from_text(text: str) -> Tableau:
    """Parse the canonical encoding "1,3,5|2,4" and validate."""
    rows = []
    for row_text in text.split("|"):
        fields = row_text.split(",")
        row = []
        for field in fields:
            if not field.strip():
                raise ValueError(f"empty field in tableau text {text!r}")
            try:
                row.append(int(field))
            except ValueError:
                raise ValueError(f"non-integer field {field!r}") from None
        rows.append(row)
    return validate_tableau(rows)


def tableau_to_text(tab: Tableau) -> str:
    return "|".join(",".join(map(str, row)) for row in tab)


def rs_insert(word: Sequence[int]) -> Tableau:
    """
    The Robinson-Schensted insertion tableau of a permutation.

    Each value bumps the leftmost strictly larger entry of the current row
    (found by binary search, since rows stay sorted) and the displaced
    entry is inserted into the next row, until a value lands at the end of
    a row.

    >>> rs_insert((2, 4, 1, 3, 5))
    ((1, 3, 5), (2, 4))
    """
    rows: list[list[int]] = []
    for x in word:
        for row in rows:
            j = bisect_left(row, x)
            if j == len(row):
                row.append(x)
                break
            row[j], x = x, row[j]
        else:
            rows.append([x])
    return tuple(map(tuple, rows))


def rs_insert_linear(word: Sequence[int]) -> Tableau:
    """
    Reference implementation of rs_insert that locates each bump position
    by linear scan.  Kept for differential testing of the bisect path.
    """
    rows: list[list[int]] = []
    for x in word:
        placed = False
        for row in rows:
            for j, y in enumerate(row):
                if y > x:
                    row[j] = x
                    x = y
                    break
            else:
                row.append(x)
                placed = True
                break
        if not placed:
            rows.append([x])
    return tuple(map(tuple, rows))


def row_word(tab: Tableau) -> tuple[int, ...]:
    """
    The row reading word: rows concatenated bottom to top.

    >>> row_word(((1, 3, 5), (2, 4)))
    (2, 4, 1, 3, 5)
    """
    out: list[int] = []
    for row in reversed(tab):
        out.extend(row)
    return tuple(out)


def column_word(tab: Tableau) -> tuple[int, ...]:
    """
    The column reading word: columns left to right, each read bottom to top.

    >>> column_word(((1, 3, 5), (2, 4)))
    (2, 1, 4, 3, 5)
    """
    out: list[int] = []
    for j in range(len(tab[0])):
        for row in reversed(tab):
            if j < len(row):
                out.append(row[j])
    return tuple(out)


def shape_of(tab: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in tab)


def conjugate(shape: Sequence[int]) -> tuple[int, ...]:
    """Column lengths of a shape (the conjugate partition)."""
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


def transpose(tab: Tableau) -> Tableau:
    """Exchange rows and columns; standard tableaux stay standard."""
    return tuple(
        tuple(row[j] for row in tab if j < len(row)) for j in range(len(tab[0]))
    )


def syt_count(shape: Sequence[int]) -> int:
    """
    Number of standard tableaux of the given shape, by the hook length
    formula: n! divided by the product of hook lengths.

    >>> syt_count((2, 2))
    2
    """
    shape = validate_shape(shape)
    cols = conjugate(shape)
    n = sum(shape)
    hooks = 1
    for i, p in enumerate(shape):
        for j in range(p):
            hooks *= (p - j) + (cols[j] - i) - 1
    return factorial(n) // hooks


def enumerate_syt(shape: Sequence[int]) -> Iterator[Tableau]:
    """
    All standard tableaux of the given shape, each exactly once, in
    lexicographic order of the sequence (row of entry 1, row of entry 2,
    ...).  Entries are placed in increasing order; entry v may end a row
    that is still shorter than the target shape and strictly shorter than
    the row above.
    """
    shape = validate_shape(shape)
    n = sum(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def place(v: int) -> Iterator[Tableau]:
        if v > n:
            yield tuple(map(tuple, rows))
            return
        for i, row in enumerate(rows):
            if len(row) < shape[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(v)
                yield from place(v + 1)
                row.pop()

    return place(1)


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """
    All partitions of n as weakly decreasing tuples, in decreasing
    lexicographic order.

    >>> list(partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def rec(m: int, cap: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for first in range(min(m, cap), 0, -1):
            for rest in rec(m - first, first):
                yield (first, *rest)

    return rec(n, n)
