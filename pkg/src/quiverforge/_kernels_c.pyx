# cython: language_level=3, boundscheck=False
"""Compiled elimination kernels; same contract as _kernels_py.

Arithmetic stays on Python Fraction objects (exactness is non-negotiable);
the win comes from typed index loops and fewer interpreter dispatches.
"""

from fractions import Fraction

BACKEND = "c"

_ONE = Fraction(1, 1)


def rref_inplace(list m, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t piv_r = 0, c, r, j, sel
    cdef list row, other
    pivots = []
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
        inv = _ONE / row[c]
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


def matmul(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    cdef Py_ssize_t i, j, t
    cdef list ai, out, row
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                v = ai[t]
                if v != 0:
                    s = s + v * b[t][j]
            row.append(Fraction(s))
        out.append(row)
    return out
