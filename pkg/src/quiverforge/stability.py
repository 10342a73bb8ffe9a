"""Exact theta-(semi)stability via quiver Grassmannian nonemptiness.

Two backends decide Gr_e(M) != emptyset:

* Backend A (certifier): seeded search for a rational witness subspace in
  Schubert-cell coordinates, verified exactly; success certifies TRUE.
* Backend B (decider): per Schubert cell, the invariance equations generate
  an ideal in the cell parameters; the cell is nonempty over the algebraic
  closure iff the ideal is proper (capped Buchberger).  B's answer is final.

Hitting a resource cap yields UNDECIDED, never a silent guess.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from quiverforge import linalg
from quiverforge.core import DimVector, QuiverError
from quiverforge.groebner import (
    BudgetExceeded,
    GroebnerCaps,
    ideal_is_proper,
    poly_add,
    poly_const,
    poly_mul,
    poly_scale,
    poly_sub,
    poly_var,
)


class UndecidedError(RuntimeError):
    """The stability engine hit its resource caps on the listed subdimensions."""

    def __init__(self, offending):
        self.offending = list(offending)
        super().__init__(f"undecided subrepresentation queries: {self.offending}")


@dataclass
class SubrepResult:
    exists: bool
    witness: dict | None = None  # vertex -> basis matrix d(v) x e(v)
    undecided: bool = False


@dataclass
class StabilityVerdict:
    status: str  # semistable | stable | unstable | not-semistable-witness
    witness_dim: DimVector | None = None
    witness: dict | None = None
    detail: str = ""


def verify_subrep_witness(m, e, spaces):
    """Exact re-validation of a claimed subrepresentation basis."""
    for v in m.algebra.quiver.vertex_order:
        u = spaces.get(v, [])
        if e[v] == 0:
            continue
        if len(u) != m.dim[v] or len(u[0]) != e[v]:
            return False
        if linalg.rank(u) != e[v]:
            return False
    for name in m.algebra.quiver.arrow_order:
        a = m.algebra.quiver.arrow_map[name]
        u_t = spaces.get(a.tail, [])
        if e[a.tail] == 0:
            continue
        image = linalg.matmul(m.matrices[name], u_t)
        if e[a.head] == 0:
            if not linalg.is_zero_matrix(image):
                return False
            continue
        stacked = linalg.hstack([spaces[a.head], image])
        if linalg.rank(stacked) != e[a.head]:
            return False
    return True


def _cell_patterns(m, e):
    """All per-vertex pivot-row patterns, deterministic order."""
    order = m.algebra.quiver.vertex_order
    per_vertex = [sorted(combinations(range(m.dim[v]), e[v])) for v in order]
    for combo in product(*per_vertex):
        yield dict(zip(order, combo))


def _cell_slots(m, e, pattern):
    """Free parameter slots (vertex, row, col) for one Schubert cell."""
    slots = []
    for v in m.algebra.quiver.vertex_order:
        pivots = pattern[v]
        pivot_set = set(pivots)
        for col, s in enumerate(pivots):
            for row in range(s + 1, m.dim[v]):
                if row not in pivot_set:
                    slots.append((v, row, col))
    return slots


def _cell_matrix(m, e, pattern, values):
    """Instantiate the cell basis matrices from a slot -> value map."""
    spaces = {}
    for v in m.algebra.quiver.vertex_order:
        pivots = pattern[v]
        u = linalg.zeros(m.dim[v], e[v])
        for col, s in enumerate(pivots):
            u[s][col] = Fraction(1)
        spaces[v] = u
    for (v, row, col), value in values.items():
        spaces[v][row][col] = Fraction(value)
    return spaces


def _cell_ideal(m, e, pattern):
    """Invariance equations of one cell as polynomials in its free slots."""
    slots = _cell_slots(m, e, pattern)
    nvars = len(slots)
    index = {slot: i for i, slot in enumerate(slots)}

    def sym_u(v):
        pivots = pattern[v]
        pivot_set = set(pivots)
        u = [[poly_const(0, nvars) for _ in range(e[v])] for _ in range(m.dim[v])]
        for col, s in enumerate(pivots):
            u[s][col] = poly_const(1, nvars)
            for row in range(s + 1, m.dim[v]):
                if row not in pivot_set:
                    u[row][col] = poly_var(index[(v, row, col)], nvars)
        return u

    sym = {v: sym_u(v) for v in m.algebra.quiver.vertex_order}
    gens = []
    for name in m.algebra.quiver.arrow_order:
        a = m.algebra.quiver.arrow_map[name]
        if e[a.tail] == 0:
            continue
        mat = m.matrices[name]
        u_t = sym[a.tail]
        rows_h = m.dim[a.head]
        image = [
            [
                _poly_lincomb(mat[r], [u_t[c][j] for c in range(m.dim[a.tail])], nvars)
                for j in range(e[a.tail])
            ]
            for r in range(rows_h)
        ]
        pivots_h = pattern[a.head]
        u_h = sym[a.head]
        for j in range(e[a.tail]):
            coeffs = [image[s][j] for s in pivots_h]
            for r in range(rows_h):
                if r in pivots_h:
                    continue
                resid = image[r][j]
                for col in range(e[a.head]):
                    resid = poly_sub(resid, poly_mul(u_h[r][col], coeffs[col]))
                if resid:
                    gens.append(resid)
    return gens, nvars


def _poly_lincomb(coeffs, polys, nvars):
    out = poly_const(0, nvars)
    for c, p in zip(coeffs, polys):
        if c != 0 and p:
            out = poly_add(out, poly_scale(p, c))
    return out


def subrep_exists(m, e, seed=0, caps=GroebnerCaps(), witness_rounds=((2, 4), (5, 6))):
    """Decide whether M has a subrepresentation of dimension vector e.

    ``witness_rounds`` is a schedule of (entry range, attempts per cell) for
    the Backend A search; Backend B then settles whatever A left open.
    """
    e = e if isinstance(e, DimVector) else DimVector(e)
    if not e <= m.dim:
        raise QuiverError("subdimension vector exceeds dim M")
    if e.is_zero():
        return SubrepResult(True, {v: [] for v in m.dim.entries})
    if e == m.dim:
        return SubrepResult(True, {v: linalg.identity(m.dim[v]) for v in m.dim.entries})

    patterns = list(_cell_patterns(m, e))

    # Backend A: coordinate subspaces first (all parameters zero), then
    # seeded small-integer parameters with a widening range.
    rng = random.Random(seed)
    for pattern in patterns:
        spaces = _cell_matrix(m, e, pattern, {})
        if verify_subrep_witness(m, e, spaces):
            return SubrepResult(True, spaces)
    for bound, attempts in witness_rounds:
        for pattern in patterns:
            slots = _cell_slots(m, e, pattern)
            if not slots:
                continue
            for _ in range(attempts):
                values = {s: rng.randint(-bound, bound) for s in slots}
                spaces = _cell_matrix(m, e, pattern, values)
                if verify_subrep_witness(m, e, spaces):
                    return SubrepResult(True, spaces)

    # Backend B: exact decision per cell.
    undecided = False
    for pattern in patterns:
        gens, _ = _cell_ideal(m, e, pattern)
        try:
            if ideal_is_proper(gens, caps):
                return SubrepResult(True, None)
        except BudgetExceeded:
            undecided = True
    if undecided:
        return SubrepResult(False, None, undecided=True)
    return SubrepResult(False, None)


def _subdim_vectors(dim):
    order = sorted(dim.entries)
    ranges = [range(dim.entries[v] + 1) for v in order]
    for combo in product(*ranges):
        yield DimVector.from_tuple(combo, order)


def _scan(m, theta, strict, seed, caps):
    """Look for a subrep violating semistability (theta > 0) or stability (>= 0)."""
    undecided = []
    for e in _subdim_vectors(m.dim):
        if e.is_zero() or e == m.dim:
            continue
        value = theta(e)
        if value < 0 or (strict == "semistable" and value == 0):
            continue
        res = subrep_exists(m, e, seed=seed, caps=caps)
        if res.undecided:
            undecided.append(e)
        elif res.exists:
            return e, res, undecided
    return None, None, undecided


def is_semistable(m, theta, seed=0, caps=GroebnerCaps()):
    if m.dim.is_zero():
        return StabilityVerdict("semistable", detail="zero module")
    if theta(m.dim) != 0:
        return StabilityVerdict("unstable", detail=f"theta(dim M) = {theta(m.dim)} != 0")
    e, res, undecided = _scan(m, theta, "semistable", seed, caps)
    if e is not None:
        return StabilityVerdict("not-semistable-witness", witness_dim=e, witness=res.witness)
    if undecided:
        raise UndecidedError(undecided)
    return StabilityVerdict("semistable")


def is_stable(m, theta, seed=0, caps=GroebnerCaps()):
    """Stable iff no proper nonzero subrep has theta >= 0.

    The zero module is not stable by convention (keeps stable => Schur).
    """
    if m.dim.is_zero():
        return StabilityVerdict("semistable", detail="zero module is not stable by convention")
    if theta(m.dim) != 0:
        return StabilityVerdict("unstable", detail=f"theta(dim M) = {theta(m.dim)} != 0")
    e, res, undecided = _scan(m, theta, "stable", seed, caps)
    if e is not None:
        status = "not-semistable-witness" if theta(e) > 0 else "semistable"
        return StabilityVerdict(
            status,
            witness_dim=e,
            witness=res.witness,
            detail="destabilizing subrep" if theta(e) > 0 else "strictly semistable",
        )
    if undecided:
        raise UndecidedError(undecided)
    return StabilityVerdict("stable")
