"""Orthogonal exceptional pairs, the quotient algebra, and the lift functor.

The lift realizes modules over the two-vertex quotient algebra as iterated
extensions inside the ambient module category: block upper-triangular
matrices whose off-diagonal part is a cocycle-weighted Kronecker mix.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from quiverforge import linalg
from quiverforge.core import (
    BoundQuiverAlgebra,
    DimVector,
    Quiver,
    Representation,
)
from quiverforge.forms import defect_weight, find_isotropic_root, tits_form
from quiverforge.genericrep import (
    GenericRepError,
    effective_cone,
    facet_interior_weight,
    facet_stable_pair,
)
from quiverforge.homology import end_dim, euler_pairing_check, ext1_space


class StageError(RuntimeError):
    def __init__(self, stage, message):
        self.stage = stage
        super().__init__(f"[{stage}] {message}")


ARROW_NAMES = "xyzw"


@dataclass
class SequenceReport:
    table: dict  # (i, j) -> EulerPairingReport, 0-based sequence positions
    end_dims: list
    failures: list  # (condition, pair, detail)

    @property
    def ok(self):
        return not self.failures


@dataclass
class ExceptionalPair:
    algebra: object
    e1: Representation
    e2: Representation
    report: SequenceReport
    cocycles: object  # ExtCocycleBasis of Ext^1(E2, E1)
    quotient: BoundQuiverAlgebra
    provenance: dict = field(default_factory=dict)


def construct_exceptional(algebra, r, seed=0, schedule=((1, 80), (2, 160), (3, 400))):
    """A module of dimension r with scalar endomorphisms and no self-extensions.

    Seeded random small-integer matrices with exact verification; the entry
    range widens along the deterministic retry schedule.
    """
    if tits_form(algebra, r) != 1:
        raise StageError("construct-exceptional", f"q(r) = {tits_form(algebra, r)} != 1")
    rng = random.Random(seed)
    attempts = 0
    for bound, rounds in schedule:
        for _ in range(rounds):
            attempts += 1
            mats = {}
            for a in algebra.quiver.arrows:
                rows, cols = r[a.head], r[a.tail]
                mats[a.name] = [
                    [Fraction(rng.randint(-bound, bound)) for _ in range(cols)]
                    for _ in range(rows)
                ]
            rep = Representation(algebra, r, mats)
            if not rep.validate().ok:
                continue
            if end_dim(rep) != 1:
                continue
            if ext1_space(rep, rep).dim != 0:
                continue
            return rep
    raise StageError(
        "construct-exceptional",
        f"no exceptional module of dim {r.entries} after {attempts} attempts",
    )


def verify_orthogonal_exceptional(algebra, sequence):
    """Certificate table for conditions (1)-(3) on a candidate sequence.

    Reports hom/ext^1 and (under a gldim <= 2 bound) inferred ext^2 for all
    ordered pairs; failures name the condition and the offending pair.
    """
    t = len(sequence)
    table = {}
    for i in range(t):
        for j in range(t):
            table[(i, j)] = euler_pairing_check(algebra, sequence[i], sequence[j])
    end_dims = [table[(i, i)].hom for i in range(t)]
    failures = []
    for i in range(t):
        if end_dims[i] != 1:
            failures.append(("exceptional", (i, i), f"End dim {end_dims[i]} != 1"))
        if table[(i, i)].ext1 != 0:
            failures.append(("exceptional", (i, i), f"self Ext^1 = {table[(i, i)].ext1}"))
        e2 = table[(i, i)].ext2_inferred
        if e2 not in (0, None):
            failures.append(("exceptional", (i, i), f"inferred self Ext^2 = {e2}"))
    for i in range(t):
        for j in range(i + 1, t):
            fwd = table[(i, j)]
            if fwd.hom != 0 or fwd.ext1 != 0 or fwd.ext2_inferred not in (0, None):
                failures.append(
                    (
                        "forward-vanishing",
                        (i, j),
                        f"hom={fwd.hom} ext1={fwd.ext1} ext2={fwd.ext2_inferred}",
                    )
                )
            if table[(j, i)].hom != 0:
                failures.append(("backward-hom", (j, i), f"hom={table[(j, i)].hom}"))
    return SequenceReport(table=table, end_dims=end_dims, failures=failures)


def build_quotient_algebra(ext_dim, inferred_ext2=0):
    """The quotient algebra of a verified pair: ext_dim arrows from 2 to 1.

    Vertex i carries E_i; as an abstract quiver this is the (generalized)
    Kronecker quiver with source "2" and sink "1", recorded in the name.
    """
    if inferred_ext2 not in (0, None):
        raise StageError(
            "quotient-algebra", f"inferred Ext^2 = {inferred_ext2} != 0; relations needed"
        )
    names = [ARROW_NAMES[i] if i < len(ARROW_NAMES) else f"g{i}" for i in range(ext_dim)]
    quiver = Quiver(["1", "2"], [(n, "2", "1") for n in names])
    return BoundQuiverAlgebra(
        quiver, gldim_bound=1, name=f"quotient[K_{ext_dim}: source 2 => sink 1]"
    )


def _block(tl, tr, br, rows_top, cols_left, rows_bot, cols_right):
    out = linalg.zeros(rows_top + rows_bot, cols_left + cols_right)
    for i in range(rows_top):
        for j in range(cols_left):
            out[i][j] = tl[i][j]
        for j in range(cols_right):
            out[i][cols_left + j] = tr[i][j]
    for i in range(rows_bot):
        for j in range(cols_right):
            out[rows_top + i][cols_left + j] = br[i][j]
    return out


def lift(pair, mprime):
    """Image of a quotient-algebra module under the iterated-extension lift.

    Spaces are E1(i) (x) k^{d'(1)} stacked over E2(i) (x) k^{d'(2)}; each
    arrow gets the block matrix [[E1 (x) I, sum_g Z_g (x) M'(g)], [0, E2 (x) I]].
    The output is re-validated; a failure here signals a cocycle-basis bug.
    """
    e1, e2 = pair.e1, pair.e2
    d1p, d2p = mprime.dim["1"], mprime.dim["2"]
    arrow_names = pair.quotient.quiver.arrow_order
    dim = DimVector(
        {
            v: d1p * e1.dim[v] + d2p * e2.dim[v]
            for v in pair.algebra.quiver.vertices
        }
    )
    i1 = linalg.identity(d1p)
    i2 = linalg.identity(d2p)
    mats = {}
    for a in pair.algebra.quiver.arrows:
        tl = linalg.kron(e1.matrices[a.name], i1)
        br = linalg.kron(e2.matrices[a.name], i2)
        tr = linalg.zeros(e1.dim[a.head] * d1p, e2.dim[a.tail] * d2p)
        for z, g in zip(pair.cocycles.basis, arrow_names):
            tr = linalg.mat_add(tr, linalg.kron(z[a.name], mprime.matrices[g]))
        mats[a.name] = _block(
            tl,
            tr,
            br,
            e1.dim[a.head] * d1p,
            e1.dim[a.tail] * d1p,
            e2.dim[a.head] * d2p,
            e2.dim[a.tail] * d2p,
        )
    out = Representation(pair.algebra, dim, mats)
    report = out.validate()
    if not report.ok:
        raise StageError("lift", f"lifted module fails validation: {report}")
    return out


def find_orthogonal_pair(algebra, seed=0):
    """Full pipeline: isotropic root, Eff cone, facet pair, verified modules.

    E1 is the negative-defect member (the submodule side); certificates
    require Ext^1(E2, E1) of dimension exactly 2 with vanishing inferred Ext^2.
    """
    h = find_isotropic_root(algebra)
    theta_h = defect_weight(algebra, h)
    try:
        cone = effective_cone(algebra, h)
    except GenericRepError as exc:
        raise StageError("effcone", str(exc)) from exc
    n = len(algebra.quiver.vertex_order)
    if cone.dim != n - 1:
        raise StageError("effcone", f"Eff(A, h) has dimension {cone.dim} != {n - 1}")
    if not cone.facets:
        raise StageError("facet", "effective cone has no positive-dimensional facets")
    last_failure = "no candidate pair verified"
    for facet in cone.facets:
        theta0 = facet_interior_weight(cone, facet)
        try:
            candidates = facet_stable_pair(algebra, h, theta0, all_pairs=True)
        except GenericRepError as exc:
            last_failure = str(exc)
            continue
        for cand in candidates:
            s1, s2 = theta_h(cand.h1), theta_h(cand.h2)
            if s1 < 0 < s2:
                hneg, hpos = cand.h1, cand.h2
            elif s2 < 0 < s1:
                hneg, hpos = cand.h2, cand.h1
            else:
                last_failure = f"defect signs {s1}, {s2} not opposite"
                continue
            e1 = construct_exceptional(algebra, hneg, seed=seed)
            e2 = construct_exceptional(algebra, hpos, seed=seed + 1)
            report = verify_orthogonal_exceptional(algebra, [e1, e2])
            back = report.table[(1, 0)]
            if not report.ok:
                last_failure = f"sequence conditions failed: {report.failures}"
                continue
            if back.ext1 != 2 or back.ext2_inferred != 0:
                last_failure = (
                    f"Ext^1(E2,E1) = {back.ext1}, inferred Ext^2 = {back.ext2_inferred}"
                )
                continue
            cocycles = ext1_space(e2, e1)
            quotient = build_quotient_algebra(cocycles.dim, back.ext2_inferred)
            order = algebra.quiver.vertex_order
            return ExceptionalPair(
                algebra=algebra,
                e1=e1,
                e2=e2,
                report=report,
                cocycles=cocycles,
                quotient=quotient,
                provenance={
                    "h": h.as_tuple(order),
                    "theta_h": tuple(int(x) for x in theta_h.as_tuple(order)),
                    "theta0": tuple(int(x) for x in theta0.as_tuple(order)),
                    "facet_tight": list(facet.tight),
                    "h1": hneg.as_tuple(order),
                    "h2": hpos.as_tuple(order),
                    "n1": cand.n1,
                    "n2": cand.n2,
                    "l": cand.l,
                    "seed": seed,
                },
            )
    raise StageError("pair-verification", last_failure)
