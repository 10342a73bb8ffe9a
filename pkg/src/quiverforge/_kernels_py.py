"""Pure-Python elimination kernels over exact rationals.

The compiled module ``quiverforge._kernels_c`` implements the same two
functions with typed index loops; :mod:`quiverforge.linalg` picks whichever
is importable.  Both operate in place on lists of lists of
:class:`fractions.Fraction` (plain ints are fine too, division promotes).
"""

from fractions import Fraction

BACKEND = "python"


def rref_inplace(m, nrows, ncols):
    """Reduce ``m`` to reduced row echelon form in place.

    Returns the list of pivot columns.  Rows below the pivot rows are left
    zeroed; the caller reads the rank off ``len(pivots)``.
    """
    pivots = []
    piv_r = 0
    for c in range(ncols):
        if piv_r == nrows:
            break
        sel = -1
        for r in range(piv_r, nrows):
            if m[r][c] != 0:
                sel = r
                break
        if sel < 0:
            continue
        if sel != piv_r:
            m[piv_r], m[sel] = m[sel], m[piv_r]
        row = m[piv_r]
        inv = Fraction(1, 1) / row[c]
        if inv != 1:
            for j in range(c, ncols):
                if row[j] != 0:
                    row[j] = row[j] * inv
        for r in range(nrows):
            if r == piv_r:
                continue
            f = m[r][c]
            if f == 0:
                continue
            other = m[r]
            for j in range(c, ncols):
                if row[j] != 0:
                    other[j] = other[j] - f * row[j]
        pivots.append(c)
        piv_r += 1
    return pivots


def matmul(a, b, n, k, m):
    """Product of an ``n x k`` and a ``k x m`` matrix (lists of lists)."""
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                v = ai[t]
                if v != 0:
                    s += v * b[t][j]
            row.append(Fraction(s))
        out.append(row)
    return out
