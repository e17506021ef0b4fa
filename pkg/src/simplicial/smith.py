"""Smith normal form over the integers.

Matrices are lists of rows of Python ints, so entries never overflow.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

Matrix = list[list[int]]


class SmithForm(NamedTuple):
    diagonal: Matrix
    rank: int
    invariant_factors: list[int]
    """Diagonal entries greater than 1; units are dropped."""
    left: Optional[Matrix] = None
    right: Optional[Matrix] = None


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    """Product of an r x k and a k x c matrix; ``inner`` pins k when r == 0."""
    k = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    return [
        [sum(row[t] * b[t][j] for t in range(k) if row[t]) for j in range(cols)]
        for row in a
    ]


def transpose(m: Matrix, cols: int | None = None) -> Matrix:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(c) for c in zip(*m)]


def smith_normal_form(m: Sequence[Sequence[int]], transforms: bool = False) -> SmithForm:
    """Diagonalize ``m`` by unimodular row and column operations.

    The pivot is always a nonzero entry of least absolute value in the
    remaining block; it is cleared against its row and column with Euclidean
    steps, and a row is folded in whenever the pivot fails to divide the rest,
    so the diagonal ends up as d_1 | d_2 | ... with every d_i > 0.

    With ``transforms`` the result also carries ``left`` and ``right`` with
    ``diagonal == left @ m @ right``.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows) if transforms else None
    v = identity(cols) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst -= q * row src
        ra, rs = a[dst], a[src]
        for c in range(cols):
            if rs[c]:
                ra[c] -= q * rs[c]
        if u is not None:
            ua, us = u[dst], u[src]
            for c in range(rows):
                if us[c]:
                    ua[c] -= q * us[c]

    def add_col(dst, src, q):
        for row in a:
            if row[src]:
                row[dst] -= q * row[src]
        if v is not None:
            for row in v:
                if row[src]:
                    row[dst] -= q * row[src]

    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)

        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, a[i][t] // p)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, a[t][j] // p)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                # move the smallest leftover in row/column t onto the pivot
                cands = [(abs(a[i][t]), i, None) for i in range(t + 1, rows) if a[i][t]]
                cands += [(abs(a[t][j]), None, j) for j in range(t + 1, cols) if a[t][j]]
                _, i, j = min(cands, key=lambda c: c[0])
                if i is not None:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        t += 1

    diag = [a[i][i] for i in range(min(rows, cols)) if a[i][i]]
    return SmithForm(
        diagonal=a,
        rank=len(diag),
        invariant_factors=[d for d in diag if d > 1],
        left=u,
        right=v,
    )


def rank(m: Sequence[Sequence[int]]) -> int:
    return smith_normal_form(m).rank
