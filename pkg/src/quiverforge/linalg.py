"""Exact rational matrix utilities.

Matrices are lists of lists of :class:`fractions.Fraction`.  The row
reduction and multiplication inner loops are delegated to a compiled
kernel when the extension built, with a pure-Python fallback selected at
import time (``quiverforge.linalg.BACKEND`` says which one is active).
"""

from fractions import Fraction
from math import gcd

try:
    from quiverforge import _kernels_c as _kernels
except ImportError:  # extension not built; pure fallback
    from quiverforge import _kernels_py as _kernels

BACKEND = _kernels.BACKEND

Matrix = list  # list[list[Fraction]]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def zeros(nrows, ncols):
    return [[_ZERO] * ncols for _ in range(nrows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = _ONE
    return m


def copy_matrix(m):
    return [list(row) for row in m]


def to_fractions(m):
    return [[Fraction(x) for x in row] for row in m]


def shape(m):
    return (len(m), len(m[0]) if m else 0)


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    n = len(a)
    k = len(b)
    if n and len(a[0]) != k:
        raise ValueError(f"shape mismatch: {shape(a)} x {shape(b)}")
    m = len(b[0]) if b else 0
    if n == 0 or m == 0 or k == 0:
        return zeros(n, m)
    return _kernels.matmul(a, b, n, k, m)


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def is_zero_matrix(m):
    return all(x == 0 for row in m for x in row)


def mat_eq(a, b):
    return shape(a) == shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def kron(a, b):
    """Kronecker product; blocks of b scaled by entries of a."""
    ra, ca = shape(a)
    rb, cb = shape(b)
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            v = a[i][j]
            if v == 0:
                continue
            for p in range(rb):
                for q in range(cb):
                    out[i * rb + p][j * cb + q] = v * b[p][q]
    return out


def hstack(blocks):
    blocks = [b for b in blocks if shape(b)[1] > 0]
    if not blocks:
        return []
    return [sum((list(b[i]) for b in blocks), []) for i in range(len(blocks[0]))]


def vstack(blocks):
    out = []
    for b in blocks:
        out.extend(copy_matrix(b))
    return out


def rref(m):
    """Reduced row echelon form; returns (new matrix, pivot columns)."""
    work = copy_matrix(m)
    nrows, ncols = shape(m)
    if nrows == 0 or ncols == 0:
        return work, []
    pivots = _kernels.rref_inplace(work, nrows, ncols)
    return work, pivots


def rank(m):
    return len(rref(m)[1])


def nullspace(m, ncols=None):
    """Basis of the right kernel, one vector (length ncols) per basis element.

    ``ncols`` must be supplied when ``m`` has no rows.
    """
    nrows, mc = shape(m)
    if ncols is None:
        ncols = mc
    if nrows == 0:
        return [[_ONE if j == i else _ZERO for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(v)
    return basis


def row_space_reduce(rows, ncols):
    """Canonical (RREF) basis of the span of the given row vectors."""
    if not rows:
        return [], []
    red, pivots = rref([list(r) for r in rows])
    return [red[i] for i in range(len(pivots))], pivots


def reduce_mod_rows(vec, red_rows, pivots):
    """Reduce a vector modulo an RREF row basis."""
    v = list(vec)
    for row, p in zip(red_rows, pivots):
        f = v[p]
        if f != 0:
            for j in range(len(v)):
                if row[j] != 0:
                    v[j] = v[j] - f * row[j]
    return v


def clear_denominators(vec):
    """Scale a rational vector to integers with content 1, preserving direction."""
    fracs = [Fraction(x) for x in vec]
    denom = 1
    for x in fracs:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints
