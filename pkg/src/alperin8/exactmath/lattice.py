"""Integer matrices: Hermite and Smith normal forms, integer kernels.

Matrices are lists of rows of Python ints so entries never overflow.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntegerMatrix = list[list[int]]


def identity(n: int) -> IntegerMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntegerMatrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols)] for row in a]


def vecmat(x: Sequence[int], a: Sequence[Sequence[int]]) -> list[int]:
    cols = len(a[0]) if a else 0
    return [sum(x[i] * a[i][j] for i in range(len(a))) for j in range(cols)]


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    m = [[Fraction(x) for x in row] for row in a]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def hermite_normal_form(a: Sequence[Sequence[int]]) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row-style HNF: returns (H, U) with U unimodular and U @ A = H.

    H is in row echelon form, pivots positive, entries above each pivot reduced
    into [0, pivot).  Zero rows of H are at the bottom.
    """
    h = [list(map(int, r)) for r in a]
    n = len(h)
    cols = len(h[0]) if n else 0
    u = identity(n)
    r = 0
    for c in range(cols):
        if r == n:
            break
        # Euclid on column c among rows r..n-1
        while True:
            nz = [i for i in range(r, n) if h[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, n):
                if h[i][c]:
                    f = h[i][c] // h[r][c]
                    h[i] = [x - f * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - f * y for x, y in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if all(h[i][c] == 0 for i in range(r, n)):
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            f = h[i][c] // h[r][c]
            if f:
                h[i] = [x - f * y for x, y in zip(h[i], h[r])]
                u[i] = [x - f * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def hnf_basis(rows: Sequence[Sequence[int]]) -> IntegerMatrix:
    """Canonical basis (nonzero HNF rows) of the lattice spanned by ``rows``."""
    if not rows:
        return []
    h, _ = hermite_normal_form(rows)
    return [r for r in h if any(r)]


def hermite_kernel(a: Sequence[Sequence[int]]) -> IntegerMatrix:
    """Basis of the integer left kernel {x : x A = 0}, in HNF."""
    n = len(a)
    if n == 0:
        return []
    if not a[0]:
        return identity(n)
    h, u = hermite_normal_form(a)
    kernel = [u[i] for i in range(n) if not any(h[i])]
    return hnf_basis(kernel)


def lattice_contains(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Membership of an integer vector in the lattice spanned by an HNF basis."""
    rem = list(v)
    for row in basis:
        c = next((j for j, x in enumerate(row) if x), None)
        if c is None:
            continue
        if any(rem[j] for j in range(c)):
            return False
        if rem[c] % row[c]:
            return False
        f = rem[c] // row[c]
        rem = [x - f * y for x, y in zip(rem, row)]
    return not any(rem)


def gram(rows: Sequence[Sequence[int]]) -> IntegerMatrix:
    return [[sum(x * y for x, y in zip(r, s)) for s in rows] for r in rows]


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Returns (D, U, V) with U @ A @ V = D diagonal, d_i | d_{i+1}, U and V unimodular."""
    d = [list(map(int, r)) for r in a]
    n = len(d)
    m = len(d[0]) if n else 0
    u, v = identity(n), identity(m)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        d[dst] = [x - f * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x - f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in d:
            row[dst] -= f * row[src]
        for row in v:
            row[dst] -= f * row[src]

    for t in range(min(n, m)):
        while True:
            nz = [(abs(d[i][j]), i, j) for i in range(t, n) for j in range(t, m) if d[i][j]]
            if not nz:
                return d, u, v
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            clean = True
            for i in range(t + 1, n):
                if d[i][t]:
                    add_row(i, t, d[i][t] // d[t][t])
                    clean = clean and d[i][t] == 0
            for j in range(t + 1, m):
                if d[t][j]:
                    add_col(j, t, d[t][j] // d[t][t])
                    clean = clean and d[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, m) if d[i][j] % d[t][t]), None)
            if bad is None:
                break
            # fold the offending row in to restore divisibility
            d[t] = [x + y for x, y in zip(d[t], d[bad[0]])]
            u[t] = [x + y for x, y in zip(u[t], u[bad[0]])]
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return d, u, v
