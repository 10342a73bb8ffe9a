"""Quivers, bound quiver algebras, and exact-rational representations.

Vertex and arrow ids are strings.  Matrix row/column order follows the
sorted order of vertex ids, and all arithmetic is exact (Fraction); no
floating point enters the mathematical core anywhere in the package.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from quiverforge import linalg


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: str
    head: str


class Quiver:
    """Finite quiver: vertex ids plus named arrows with tail/head."""

    def __init__(self, vertices, arrows):
        self.vertices = [str(v) for v in vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex ids")
        self.vertex_order = sorted(self.vertices)
        vset = set(self.vertices)
        self.arrows = []
        for a in arrows:
            arr = a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2]))
            if arr.tail not in vset or arr.head not in vset:
                raise QuiverError(f"arrow {arr.name} references unknown vertex")
            self.arrows.append(arr)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("duplicate arrow ids")
        self.arrow_map = {a.name: a for a in self.arrows}
        self.arrow_order = sorted(names)

    def arrow_count(self, tail, head):
        return sum(1 for a in self.arrows if a.tail == tail and a.head == head)

    def is_acyclic(self):
        adj = {v: [] for v in self.vertices}
        for a in self.arrows:
            adj[a.tail].append(a.head)
        state = {}

        def visit(v):
            state[v] = 1
            for w in adj[v]:
                s = state.get(w)
                if s == 1:
                    return False
                if s is None and not visit(w):
                    return False
            state[v] = 2
            return True

        return all(state.get(v) == 2 or visit(v) for v in self.vertices)

    def path_endpoints(self, path):
        """Tail and head of a composable path (sequence of arrow names, first applied first)."""
        if not path:
            raise QuiverError("trivial path needs an explicit vertex; see Representation.evaluate_path")
        prev = None
        for name in path:
            arr = self.arrow_map.get(name)
            if arr is None:
                raise QuiverError(f"unknown arrow {name!r}")
            if prev is not None and prev != arr.tail:
                raise QuiverError(f"path not composable at arrow {name!r}")
            prev = arr.head
        return self.arrow_map[path[0]].tail, prev


class Relation:
    """k-linear combination of parallel paths of length >= 2."""

    def __init__(self, terms, quiver):
        self.terms = []
        tail = head = None
        for coeff, path in terms:
            path = tuple(str(p) for p in path)
            if len(path) < 2:
                raise QuiverError("relation paths must have length >= 2 (admissibility)")
            t, h = quiver.path_endpoints(path)
            if tail is None:
                tail, head = t, h
            elif (t, h) != (tail, head):
                raise QuiverError("relation terms must share tail and head")
            self.terms.append((Fraction(coeff), path))
        if not self.terms:
            raise QuiverError("empty relation")
        self.tail = tail
        self.head = head


class BoundQuiverAlgebra:
    """A = kQ/I with a user-supplied generating set of relations.

    The relation set is declared minimal by the user and the admissibility
    upper bound R^L <= I is an unchecked user assertion; both are recorded
    in ``assumptions``.  ``gldim_bound`` (if given) backs the Ext^2
    inference in the homology layer.
    """

    def __init__(self, quiver, relations=(), gldim_bound=None, name=""):
        self.quiver = quiver
        self.relations = [
            r if isinstance(r, Relation) else Relation(r, quiver) for r in relations
        ]
        self.gldim_bound = gldim_bound
        self.name = name
        self.triangular = quiver.is_acyclic()
        self.assumptions = {
            "relations_minimal": True,
            "admissibility_upper_bound": True,
        }

    @property
    def hereditary(self):
        return not self.relations

    def vertex_index(self, v):
        return self.quiver.vertex_order.index(v)

    def same_as(self, other):
        return self.quiver.vertex_order == other.quiver.vertex_order and \
            self.quiver.arrow_order == other.quiver.arrow_order


class DimVector:
    """Nonnegative integer vector indexed by the vertices of a quiver."""

    def __init__(self, entries):
        self.entries = {}
        for v, n in entries.items():
            n = int(n)
            if n < 0:
                raise QuiverError(f"negative dimension at vertex {v!r}")
            self.entries[str(v)] = n

    def __getitem__(self, v):
        return self.entries[v]

    def vertices(self):
        return sorted(self.entries)

    def as_tuple(self, order=None):
        return tuple(self.entries[v] for v in (order or self.vertices()))

    @classmethod
    def from_tuple(cls, values, order):
        return cls(dict(zip(order, values)))

    def __add__(self, other):
        return DimVector({v: self.entries[v] + other.entries[v] for v in self.entries})

    def __sub__(self, other):
        return DimVector({v: self.entries[v] - other.entries[v] for v in self.entries})

    def scale(self, n):
        return DimVector({v: n * x for v, x in self.entries.items()})

    def __le__(self, other):
        return all(self.entries[v] <= other.entries[v] for v in self.entries)

    def __eq__(self, other):
        return isinstance(other, DimVector) and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(sorted(self.entries.items())))

    def is_zero(self):
        return all(x == 0 for x in self.entries.values())

    def total(self):
        return sum(self.entries.values())

    def content(self):
        from math import gcd

        g = 0
        for x in self.entries.values():
            g = gcd(g, x)
        return g

    def is_indivisible(self):
        return self.content() == 1

    def __repr__(self):
        return f"DimVector({self.entries})"


@dataclass
class ValidityReport:
    ok: bool
    shape_errors: list = field(default_factory=list)
    relation_errors: list = field(default_factory=list)


class Representation:
    """Point of mod(A, d): one exact-rational matrix per arrow."""

    def __init__(self, algebra, dim, matrices):
        self.algebra = algebra
        self.dim = dim if isinstance(dim, DimVector) else DimVector(dim)
        self.matrices = {}
        for a in algebra.quiver.arrows:
            m = matrices.get(a.name)
            if m is None:
                m = linalg.zeros(self.dim[a.head], self.dim[a.tail])
            self.matrices[a.name] = linalg.to_fractions(m)

    def matrix(self, arrow_name):
        return self.matrices[arrow_name]

    def evaluate_path(self, path, vertex=None):
        """Matrix of a path (arrow names, first applied first).

        An empty path is the trivial path at ``vertex`` and yields the
        identity on that vertex space.
        """
        if not path:
            if vertex is None:
                raise QuiverError("trivial path needs a vertex")
            return linalg.identity(self.dim[str(vertex)])
        self.algebra.quiver.path_endpoints(tuple(path))
        out = None
        for name in path:
            m = self.matrices[name]
            out = m if out is None else linalg.matmul(m, out)
        return out

    def evaluate_relation(self, relation):
        out = linalg.zeros(self.dim[relation.head], self.dim[relation.tail])
        for coeff, path in relation.terms:
            out = linalg.mat_add(out, linalg.mat_scale(self.evaluate_path(path), coeff))
        return out

    def validate(self):
        report = ValidityReport(ok=True)
        for a in self.algebra.quiver.arrows:
            m = self.matrices[a.name]
            want = (self.dim[a.head], self.dim[a.tail])
            got = (len(m), len(m[0]) if m else 0)
            if self.dim[a.head] > 0 and got != want:
                report.shape_errors.append((a.name, got, want))
        if report.shape_errors:
            report.ok = False
            return report
        for idx, rel in enumerate(self.algebra.relations):
            val = self.evaluate_relation(rel)
            if not linalg.is_zero_matrix(val):
                report.relation_errors.append((idx, val))
        report.ok = not report.relation_errors
        return report


def validate_representation(algebra, dim, matrices):
    """Shape and relation check for raw matrix data over an algebra."""
    dim = dim if isinstance(dim, DimVector) else DimVector(dim)
    unknown = [a for a in matrices if a not in algebra.quiver.arrow_map]
    report = ValidityReport(ok=True)
    if unknown:
        report.ok = False
        report.shape_errors = [(a, "unknown arrow", None) for a in sorted(unknown)]
        return report
    for a in algebra.quiver.arrows:
        m = matrices.get(a.name)
        if m is None:
            continue
        want = (dim[a.head], dim[a.tail])
        got = (len(m), len(m[0]) if m else 0)
        if want[0] > 0 and want[1] > 0 and got != want:
            report.shape_errors.append((a.name, got, want))
        elif (want[0] == 0 or want[1] == 0) and m and any(row for row in m):
            report.shape_errors.append((a.name, got, want))
    if report.shape_errors:
        report.ok = False
        return report
    rep = Representation(algebra, dim, matrices)
    return rep.validate()


def direct_sum(m, n):
    """Block-diagonal sum of two representations over the same algebra."""
    if m.algebra is not n.algebra and not m.algebra.same_as(n.algebra):
        raise QuiverError("direct_sum: algebra mismatch")
    dim = m.dim + n.dim
    mats = {}
    for a in m.algebra.quiver.arrows:
        ma, na = m.matrices[a.name], n.matrices[a.name]
        rows_m, cols_m = m.dim[a.head], m.dim[a.tail]
        rows_n, cols_n = n.dim[a.head], n.dim[a.tail]
        out = linalg.zeros(rows_m + rows_n, cols_m + cols_n)
        for i in range(rows_m):
            for j in range(cols_m):
                out[i][j] = ma[i][j]
        for i in range(rows_n):
            for j in range(cols_n):
                out[rows_m + i][cols_m + j] = na[i][j]
        mats[a.name] = out
    return Representation(m.algebra, dim, mats)


def zero_representation(algebra):
    return Representation(algebra, DimVector({v: 0 for v in algebra.quiver.vertices}), {})


def simple_representation(algebra, vertex):
    return Representation(
        algebra,
        DimVector({v: 1 if v == str(vertex) else 0 for v in algebra.quiver.vertices}),
        {},
    )


def unit_dim_vector(algebra, vertex):
    return DimVector({v: 1 if v == str(vertex) else 0 for v in algebra.quiver.vertices})
