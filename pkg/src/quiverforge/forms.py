"""Euler/Ringel bilinear form, Tits form, isotropic roots, defect weights."""

from fractions import Fraction

from quiverforge import linalg
from quiverforge.core import DimVector, unit_dim_vector


class FormError(ValueError):
    pass


class Weight:
    """Integer (or rational) vector indexed by vertices, paired via theta(d)."""

    def __init__(self, entries):
        self.entries = {str(v): Fraction(x) for v, x in entries.items()}

    def __call__(self, d):
        entries = d.entries if hasattr(d, "entries") else d
        return sum(self.entries[v] * entries[v] for v in self.entries)

    def as_tuple(self, order=None):
        return tuple(self.entries[v] for v in (order or sorted(self.entries)))

    @classmethod
    def from_tuple(cls, values, order):
        return cls(dict(zip(order, values)))

    def __eq__(self, other):
        return isinstance(other, Weight) and self.entries == other.entries

    def __repr__(self):
        return f"Weight({self.entries})"


def relation_counts(algebra):
    """r(i,j): number of declared relations with tail i and head j.

    Equals dim Ext^2(S_i, S_j) when the declared relation set is minimal
    (a recorded precondition on the algebra, not checked here).
    """
    r = {}
    for rel in algebra.relations:
        key = (rel.tail, rel.head)
        r[key] = r.get(key, 0) + 1
    return r


def euler_matrix(algebra, ext1_table=None, ext2_table=None):
    """Matrix C with <d,e> = d^T C e, vertices in canonical sorted order.

    For triangular algebras C[i][j] = delta_ij - #arrows(i->j) + r(i,j).
    Non-triangular algebras need explicit Ext tables for the simples.
    """
    order = algebra.quiver.vertex_order
    if not algebra.triangular and (ext1_table is None or ext2_table is None):
        raise FormError("non-triangular algebra needs explicit Ext tables for simples")
    n = len(order)
    c = [[Fraction(0)] * n for _ in range(n)]
    r = relation_counts(algebra)
    for i, vi in enumerate(order):
        for j, vj in enumerate(order):
            if ext1_table is not None:
                e1 = ext1_table.get((vi, vj), 0)
                e2 = (ext2_table or {}).get((vi, vj), 0)
            else:
                e1 = algebra.quiver.arrow_count(vi, vj)
                e2 = r.get((vi, vj), 0)
            c[i][j] = Fraction((1 if i == j else 0) - e1 + e2)
    return c


def euler_form(algebra, d, e, **tables):
    """Ringel bilinear form <d, e>_A as an exact integer."""
    c = euler_matrix(algebra, **tables)
    order = algebra.quiver.vertex_order
    dv = d.as_tuple(order)
    ev = e.as_tuple(order)
    total = sum(dv[i] * c[i][j] * ev[j] for i in range(len(order)) for j in range(len(order)))
    return int(total)


def tits_form(algebra, d, **tables):
    """Tits quadratic form q_A(d); equals the Euler form on the diagonal."""
    return euler_form(algebra, d, d, **tables)


def symmetrized_euler_matrix(algebra, **tables):
    c = euler_matrix(algebra, **tables)
    return linalg.mat_add(c, linalg.transpose(c))


def find_isotropic_root(algebra, **tables):
    """The unique indivisible positive generator of the radical of q_A.

    Supported exactly when the symmetrized Euler matrix has nullity 1 with a
    sign-definite kernel vector (the tame concealed / extended Dynkin case).
    """
    s = symmetrized_euler_matrix(algebra, **tables)
    kernel = linalg.nullspace(s)
    if len(kernel) == 0:
        raise FormError("radical of the Tits form is zero (representation-finite input)")
    if len(kernel) > 1:
        raise FormError(f"radical has dimension {len(kernel)}; unsupported algebra class")
    ints = linalg.clear_denominators(kernel[0])
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if not all(x > 0 for x in ints):
        raise FormError("kernel generator is not strictly positive; unsupported algebra class")
    order = algebra.quiver.vertex_order
    h = DimVector.from_tuple(ints, order)
    if tits_form(algebra, h, **tables) != 0:
        raise FormError("kernel generator is not isotropic")
    return h


def defect_weight(algebra, h, **tables):
    """theta_h with theta_h(d) = <h, d>_A; vanishes on h."""
    order = algebra.quiver.vertex_order
    entries = {
        v: euler_form(algebra, h, unit_dim_vector(algebra, v), **tables) for v in order
    }
    return Weight(entries)


def classify_by_defect(theta_h, x):
    """Defect trisection by sign: P (<0), R (=0), Q (>0).

    ``x`` may be a representation or a dimension vector; indecomposability is
    the caller's responsibility.
    """
    d = x.dim if hasattr(x, "dim") else x
    value = theta_h(d)
    if value < 0:
        return "P"
    if value > 0:
        return "Q"
    return "R"
