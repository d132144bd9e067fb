"""Exact linear algebra over Q on short vectors.

Subspaces of Q^n are stored as tuples of rows in reduced row echelon form,
which makes them canonical: two subspaces are equal iff their tuples are.
"""

from fractions import Fraction
from functools import lru_cache


def _frac_row(row):
    return [Fraction(v) for v in row]


def rref(rows):
    """Reduced row echelon basis of the span of ``rows`` (zero rows dropped)."""
    return _rref(tuple(tuple(r) for r in rows))


@lru_cache(maxsize=1 << 16)
def _rref(rows):
    # the same small systems recur across degrees, so results are memoized
    m = [_frac_row(r) for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(m)):
            if m[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        m[pivot_row], m[sel] = m[sel], m[pivot_row]
        p = m[pivot_row][col]
        m[pivot_row] = [v / p for v in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return tuple(tuple(r) for r in m[:pivot_row])


def pivots(basis):
    out = []
    for row in basis:
        for j, v in enumerate(row):
            if v != 0:
                out.append(j)
                break
    return out


def reduce(vec, basis):
    """Reduce ``vec`` modulo an rref ``basis``; zero iff vec is in the span."""
    v = _frac_row(vec)
    for row, p in zip(basis, pivots(basis)):
        if v[p] != 0:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return tuple(v)


def in_span(vec, basis):
    return not any(reduce(vec, basis))


def span(*bases):
    rows = [r for b in bases for r in b]
    return rref(rows)


def nullspace(rows, ncols):
    """Basis (rref) of {c : r.c = 0 for every r in rows}."""
    if not rows:
        return rref([[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)])
    red = rref(rows)
    piv = pivots(red)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return rref(basis)


def complement(vecs, ncols):
    """Basis of the orthogonal complement of span(vecs)."""
    return nullspace(list(vecs), ncols)


def intersect(a, b, ncols):
    """Intersection of two subspaces given by bases."""
    if not a or not b:
        return ()
    # U ∩ W = (U^perp + W^perp)^perp
    perp = list(complement(a, ncols)) + list(complement(b, ncols))
    return nullspace(perp, ncols)


def quotient_basis(space, sub):
    """Canonical vectors of ``space`` spanning it modulo ``sub``.

    Both arguments are rref bases with sub ⊆ space.
    """
    reduced = [reduce(v, sub) for v in space]
    return rref([r for r in reduced if any(r)])


def solve(matrix, rhs):
    """Solve the square system matrix @ x = rhs exactly; None if singular."""
    n = len(matrix)
    aug = [_frac_row(row) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    red = rref(aug)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        return None
    return tuple(red[i][n] for i in range(n))


def inverse(matrix):
    """Exact inverse of a square integer/rational matrix; None if singular."""
    n = len(matrix)
    aug = [_frac_row(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    red = rref(aug)
    if len(red) < n or pivots(red) != list(range(n)):
        return None
    return tuple(tuple(row[n:]) for row in red)


def determinant(matrix):
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [_frac_row(r) for r in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        sel = next((r for r in range(col, n) if m[r][col] != 0), None)
        if sel is None:
            return Fraction(0)
        if sel != col:
            m[col], m[sel] = m[sel], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det
