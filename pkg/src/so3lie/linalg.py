"""Exact Gaussian elimination over Q(sqrt 3).

Matrices are lists of rows; rows are sequences of :class:`Scalar`.  Pivoting
always takes the first row with a nonzero entry in the leftmost remaining
column, so every result is deterministic.
"""

from __future__ import annotations

from collections.abc import Sequence

from .scalars import ONE, ZERO, Scalar

Row = list[Scalar]


def rref(rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pr = m[r]
        inv = pr[c].inv()
        if inv != ONE:
            pr = [x * inv if x else x for x in pr]
            m[r] = pr
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    m[i] = [x - f * y if y else x for x, y in zip(row, pr)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Scalar]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> list[Row]:
    """Basis of ``{x : A x = 0}``, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> tuple[Row | None, list[Row]]:
    """Solve ``A x = rhs``.

    Returns a particular solution (``None`` if inconsistent) and a basis of
    the homogeneous solution space.
    """
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None, nullspace(rows, ncols)
    x = [ZERO] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x, nullspace(rows, ncols)


def in_span(basis_rref: Sequence[Sequence[Scalar]], pivots: Sequence[int], v: Sequence[Scalar]) -> bool:
    """Membership of ``v`` in the row space given in reduced form."""
    residual = list(v)
    for row, p in zip(basis_rref, pivots):
        f = residual[p]
        if f:
            residual = [x - f * y if y else x for x, y in zip(residual, row)]
    return not any(residual)


def coordinates(basis_rref: Sequence[Sequence[Scalar]], pivots: Sequence[int], v: Sequence[Scalar]) -> Row | None:
    """Coefficients of ``v`` in the reduced basis, or ``None`` if not in the span."""
    residual = list(v)
    coeffs = []
    for row, p in zip(basis_rref, pivots):
        f = residual[p]
        coeffs.append(f)
        if f:
            residual = [x - f * y if y else x for x, y in zip(residual, row)]
    return None if any(residual) else coeffs


def same_row_space(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]], ncols: int) -> bool:
    ra, _ = rref(a, ncols)
    rb, _ = rref(b, ncols)
    return ra == rb


def det(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    m = [list(r) for r in matrix]
    n = len(m)
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        piv = m[c][c]
        result = result * piv
        inv = piv.inv()
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def signature(matrix: Sequence[Sequence[Scalar]]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` inertia of a symmetric matrix, by congruence."""
    m = [list(r) for r in matrix]
    n = len(m)
    pos = negc = 0
    active = list(range(n))
    while active:
        i = next((k for k in active if m[k][k]), None)
        if i is None:
            pair = next(((k, l) for k in active for l in active if k < l and m[k][l]), None)
            if pair is None:
                break
            k, l = pair
            # congruence row/col k += row/col l makes m[k][k] = 2 m[k][l] != 0
            for t in range(n):
                m[k][t] = m[k][t] + m[l][t]
            for t in range(n):
                m[t][k] = m[t][k] + m[t][l]
            i = k
        piv = m[i][i]
        s = piv.sign()
        pos += s > 0
        negc += s < 0
        inv = piv.inv()
        active.remove(i)
        for k in active:
            f = m[k][i] * inv
            if f:
                for t in range(n):
                    m[k][t] = m[k][t] - f * m[i][t]
                for t in range(n):
                    m[t][k] = m[t][k] - f * m[t][i]
    return pos, negc, n - pos - negc
