"""Exact matrix rank over the rationals or a prime field.

Matrices are sparse: a list of rows, each row a ``{column: int}`` dict.
Rational rank uses fraction-free elimination on integers (rows are
divided by their content after each update so entries stay small).
"""

from __future__ import annotations

from math import gcd

RATIONALS = 0


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_field(field: int) -> int:
    if field != RATIONALS and not is_prime(field):
        raise ValueError(f"field characteristic {field} is not prime")
    return field


def _content(row: dict) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def rank(rows: list[dict], field: int = RATIONALS) -> int:
    """Rank of a sparse integer matrix over Q (``field=0``) or GF(field)."""
    check_field(field)
    p = field
    work = []
    for row in rows:
        if p:
            row = {c: v % p for c, v in row.items() if v % p}
        else:
            row = {c: v for c, v in row.items() if v}
        if row:
            work.append(row)
    r = 0
    while work:
        # pivot on the shortest row to limit fill-in
        k = min(range(len(work)), key=lambda i: len(work[i]))
        prow = work.pop(k)
        col = min(prow)
        a = prow[col]
        if p:
            inv = pow(a, -1, p)
            prow = {c: v * inv % p for c, v in prow.items()}
            a = 1
        r += 1
        rest = []
        for row in work:
            b = row.get(col)
            if b is None:
                rest.append(row)
                continue
            if p:
                new = dict(row)
                for c, v in prow.items():
                    x = (new.get(c, 0) - b * v) % p
                    if x:
                        new[c] = x
                    else:
                        new.pop(c, None)
            else:
                g = gcd(a, b)
                fa, fb = a // g, b // g
                new = {c: fa * v for c, v in row.items()}
                for c, v in prow.items():
                    x = new.get(c, 0) - fb * v
                    if x:
                        new[c] = x
                    else:
                        new.pop(c, None)
                g = _content(new)
                if g > 1:
                    new = {c: v // g for c, v in new.items()}
            if new:
                rest.append(new)
        work = rest
    return r
