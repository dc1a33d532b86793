"""Exact ranks of sparse integer matrices over Q and GF(2).

Matrices arrive as lists of sparse rows ``{column: int}``; only ranks are
needed, so rows may be rescaled freely and elimination stays in integers.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

FIELDS = ("Q", "F2")


def normalize_field(field: str) -> str:
    f = str(field).strip().upper()
    if f in ("Q", "QQ", "RATIONALS", "0"):
        return "Q"
    if f in ("F2", "GF2", "GF(2)", "2"):
        return "F2"
    raise ValueError(f"unsupported field {field!r}; use Q or F2")


def rank_f2(rows: Iterable[int]) -> int:
    """Rank of GF(2) row vectors given as bitmasks."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            piv = basis.get(top)
            if piv is None:
                basis[top] = r
                break
            r ^= piv
    return len(basis)


def rank_q(rows: Iterable[dict[int, int]]) -> int:
    """Rank over Q by fraction-free incremental row echelon form.

    Each incoming row is reduced by the stored pivot rows on its leading
    column until it either vanishes or starts a new pivot. Reductions use
    ``r <- p*r - a*pivot`` followed by division by the row content, so
    entries stay small integers for boundary matrices.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = r
                break
            p, a = piv[lead], r[lead]
            if p in (1, -1):
                f = a * p
                for c, v in piv.items():
                    nv = r.get(c, 0) - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            else:
                g = gcd(p, a)
                sp, sa = p // g, a // g
                nr = {c: sp * v for c, v in r.items()}
                for c, v in piv.items():
                    nv = nr.get(c, 0) - sa * v
                    if nv:
                        nr[c] = nv
                    else:
                        nr.pop(c, None)
                content = 0
                for v in nr.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                r = {c: v // content for c, v in nr.items()} if content > 1 else nr
    return len(pivots)


def rank(rows: list[dict[int, int]], field: str) -> int:
    if normalize_field(field) == "F2":
        packed = []
        for row in rows:
            m = 0
            for c, v in row.items():
                if v % 2:
                    m |= 1 << c
            packed.append(m)
        return rank_f2(packed)
    return rank_q(rows)
