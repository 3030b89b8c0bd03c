"""Exact rank of sparse integer matrices.

Rows are dicts ``{column: value}``. Over the rationals the elimination is
fraction free (rows are rescaled by integers and reduced by their gcd);
with ``p`` given the arithmetic is modulo the prime ``p``.
"""

from __future__ import annotations

from math import gcd


def _normalize(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank(rows, p: int | None = None) -> int:
    pivots: dict = {}
    for row in rows:
        if p is None:
            row = {c: v for c, v in row.items() if v}
        else:
            row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                if p is not None:
                    inv = pow(row[col], -1, p)
                    row = {c: v * inv % p for c, v in row.items()}
                else:
                    row = _normalize(row)
                pivots[col] = row
                break
            a, b = piv[col], row[col]
            if p is None:
                # a*row - b*piv kills column col
                new = {c: a * v for c, v in row.items()}
                for c, v in piv.items():
                    new[c] = new.get(c, 0) - b * v
                row = _normalize({c: v for c, v in new.items() if v})
            else:
                new = dict(row)
                for c, v in piv.items():
                    new[c] = (new.get(c, 0) - b * v) % p
                row = {c: v for c, v in new.items() if v}
    return len(pivots)
