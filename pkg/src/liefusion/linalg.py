"""Exact linear algebra over the rationals.

Matrices are lists of rows, vectors are lists; entries are ints or
``Fraction``.  Everything here is small-dimensional (weight spaces of a
few hundred at most), so plain Gaussian elimination is adequate.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

Matrix = List[List[Fraction]]
Vector = List[Fraction]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if not a or not b:
        return [[] for _ in a]
    if len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a[0])} vs {len(b)}")
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> Vector:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def madd(a: Matrix, b: Matrix, scale=1) -> Matrix:
    return [[x + scale * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero(a) -> bool:
    return all(not x for row in a for x in row)


def rref(a: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [[Fraction(x) for x in row] for row in a]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(a: Sequence[Sequence]) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {x : a x = 0}, returned as a list of vectors."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return identity(ncols)
    m, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            x[pc] = -row[f]
        basis.append(x)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> Vector:
    """Some exact solution x of a x = b; ValueError if inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for row, pc in zip(m, pivots):
        x[pc] = row[-1]
    return x


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]


def det(a: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a greedily chosen maximal independent subset of ``rows``."""
    chosen: list[int] = []
    echelon: list[tuple[int, Vector]] = []  # (pivot column, normalized row)
    for idx, row in enumerate(rows):
        v = [Fraction(x) for x in row]
        for pc, e in echelon:
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, e)]
        pc = next((c for c, x in enumerate(v) if x), None)
        if pc is None:
            continue
        inv = 1 / v[pc]
        echelon.append((pc, [x * inv for x in v]))
        chosen.append(idx)
    return chosen
