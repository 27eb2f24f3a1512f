"""Exact rank and nullity of sparse integer systems."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over Q of integer rows given as {column: value} maps.

    Fraction-free: a row is reduced against a stored pivot row by
    ``p * row - row[c] * pivot`` and divided by the content afterwards, so
    every entry stays an integer.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = _normalize(row)
                break
            p, f = piv[c], row[c]
            new = {col: p * v for col, v in row.items()}
            for col, v in piv.items():
                new[col] = new.get(col, 0) - f * v
            row = _normalize({col: v for col, v in new.items() if v})
    return len(pivots)


def nullity(rows: Iterable[Mapping[int, int]], ncols: int) -> int:
    return ncols - rank(rows)
