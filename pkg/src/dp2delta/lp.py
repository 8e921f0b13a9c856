"""Exact two-phase simplex over Fractions with Bland's rule.

Solves  max c.x  subject to  A x = b, x >= 0.
"""

from fractions import Fraction


class LPInfeasible(Exception):
    pass


class LPUnbounded(Exception):
    pass


def _pivot(T, basis, row, col):
    piv = T[row][col]
    T[row] = [x / piv for x in T[row]]
    for i, r in enumerate(T):
        if i != row and r[col] != 0:
            f = r[col]
            T[i] = [x - f * y for x, y in zip(r, T[row])]
    basis[row] = col


def _run(T, basis, ncols):
    # objective is the last row, stored as reduced costs (maximise -> look for negative)
    m = len(T) - 1
    while True:
        obj = T[-1]
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return
        best = None
        for i in range(m):
            a = T[i][col]
            if a > 0:
                ratio = T[i][-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise LPUnbounded()
        _pivot(T, basis, best[1], col)


def solve(A, b, c=None):
    """Return (value, x) for max c.x; c=None means pure feasibility.

    Raises LPInfeasible or LPUnbounded.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # phase 1 with artificials n..n+m-1
    T = [A[i] + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    obj = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n):
            obj[j] -= T[i][j]
        obj[-1] -= T[i][-1]
    T.append(obj)
    basis = list(range(n, n + m))
    _run(T, basis, n + m)
    if T[-1][-1] != 0:
        raise LPInfeasible()
    # drive artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if T[i][j] != 0), None)
            if col is not None:
                _pivot(T, basis, i, col)
    keep = [i for i in range(m) if basis[i] < n]
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    if c is None:
        c = [0] * n
    c = [Fraction(x) for x in c]
    obj = [-x for x in c] + [Fraction(0)]
    for i, bv in enumerate(basis):
        f = obj[bv]
        if f != 0:
            obj = [x - f * y for x, y in zip(obj, T[i])]
    T.append(obj)
    _run(T, basis, n)
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = T[i][-1]
    return T[-1][-1], x
