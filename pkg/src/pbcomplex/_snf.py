"""Exact integer elimination for sparse boundary matrices.

Matrices are lists of sparse rows ``{column: int}``.  Python integers give
arbitrary precision, so intermediate pivots cannot overflow.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

Row = Dict[int, int]


def smith_diagonal(dense: List[List[int]]) -> List[int]:
    """Non-zero diagonal of the Smith normal form of a dense integer matrix.

    Entries are positive and each divides the next.
    """
    a = [list(r) for r in dense]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        # smallest non-zero entry of the trailing block as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for r in a[t:]:
                            r[j] -= q * r[t]
                    if a[t][j]:
                        done = False
            if done:
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                rb, rt = a[bad], a[t]
                for j in range(t, n):
                    rt[j] += rb[j]
                continue
            # remainder left somewhere: move the new smallest entry to the pivot
            best = None
            for i in range(t, m):
                if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                    best = (abs(a[i][t]), i, t)
            for j in range(t, n):
                if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            a[t], a[i] = a[i], a[t]
            for r in a:
                r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def elementary_divisors(rows: List[Row]) -> Tuple[int, List[int]]:
    """Rank and invariant factors (> 1) of a sparse integer matrix.

    Unit pivots are eliminated sparsely first; whatever is left (no entry of
    absolute value 1) goes through a dense Smith reduction.
    """
    rows = [dict(r) for r in rows if r]
    cols: Dict[int, set] = {}
    for i, r in enumerate(rows):
        for c in r:
            cols.setdefault(c, set()).add(i)
    alive = set(range(len(rows)))
    rank = 0
    progress = True
    while progress:
        progress = False
        for i in sorted(alive, key=lambda i: len(rows[i])):
            if i not in alive:
                continue
            r = rows[i]
            if not r:
                alive.discard(i)
                continue
            piv = None
            for c, x in r.items():
                if x == 1 or x == -1:
                    if piv is None or len(cols[c]) < len(cols[piv]):
                        piv = c
            if piv is None:
                continue
            u = r[piv]
            for k in list(cols[piv]):
                if k == i:
                    continue
                rk = rows[k]
                f = rk[piv] * u
                for c, x in r.items():
                    y = rk.get(c, 0) - f * x
                    if y:
                        if c not in rk:
                            cols[c].add(k)
                        rk[c] = y
                    elif c in rk:
                        del rk[c]
                        cols[c].discard(k)
                if not rk:
                    alive.discard(k)
            for c in r:
                cols[c].discard(i)
            del cols[piv]
            rows[i] = {}
            alive.discard(i)
            rank += 1
            progress = True
    rest = [rows[i] for i in sorted(alive) if rows[i]]
    if not rest:
        return rank, []
    used = sorted({c for r in rest for c in r})
    idx = {c: j for j, c in enumerate(used)}
    dense = [[0] * len(used) for _ in rest]
    for i, r in enumerate(rest):
        for c, x in r.items():
            dense[i][idx[c]] = x
    diag = smith_diagonal(dense)
    return rank + len(diag), [d for d in diag if d > 1]
