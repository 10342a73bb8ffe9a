"""End-to-end constructor for the bad-orbit instance, plus verification.

The singularity statements themselves (non-unibranch, non-Cohen-Macaulay)
are carried as cited conclusions; everything this module emits is an exact
computed certificate for the construction that transports them.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from quiverforge import serialize
from quiverforge.core import (
    BoundQuiverAlgebra,
    DimVector,
    Quiver,
    Representation,
)
from quiverforge.exceptional import (
    ExceptionalPair,
    StageError,
    find_orthogonal_pair,
    lift,
)
from quiverforge.forms import Weight, defect_weight, find_isotropic_root
from quiverforge.homology import end_dim, ext1_space, hom_space, orbit_dimension
from quiverforge.serialize import SCHEMA_VERSION


def kronecker_algebra():
    return BoundQuiverAlgebra(
        Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")]),
        gldim_bound=1,
        name="K2",
    )


def zwara_module(algebra=None):
    """The fixed (3,3) Kronecker module whose orbit closure is singular."""
    algebra = algebra or kronecker_algebra()
    one, zero = Fraction(1), Fraction(0)
    ma = [[zero, zero, zero], [one, zero, zero], [zero, one, zero]]
    mb = [[one, zero, zero], [zero, zero, zero], [zero, zero, one]]
    arrows = sorted(algebra.quiver.arrow_order)
    return Representation(
        algebra,
        DimVector({algebra.quiver.arrows[0].tail: 3, algebra.quiver.arrows[0].head: 3}),
        {arrows[0]: ma, arrows[1]: mb},
    )


def is_kronecker_shaped(algebra):
    q = algebra.quiver
    if len(q.vertices) != 2 or len(q.arrows) != 2 or algebra.relations:
        return False
    a, b = q.arrows
    return a.tail == b.tail and a.head == b.head and a.tail != a.head


def quotient_module_from_kronecker(pair, krep):
    """Transport a module over the standard K2 (arrows 1=>2) to the quotient.

    The K2 source plays the top simple (vertex "2" of the quotient); arrows
    a, b map to x, y in that order.
    """
    src = krep.algebra.quiver.arrows[0].tail
    snk = krep.algebra.quiver.arrows[0].head
    karrows = krep.algebra.quiver.arrow_order
    qarrows = pair.quotient.quiver.arrow_order
    dim = DimVector({"2": krep.dim[src], "1": krep.dim[snk]})
    mats = {qa: krep.matrices[ka] for ka, qa in zip(karrows, qarrows)}
    return Representation(pair.quotient, dim, mats)


@dataclass
class BadOrbitInstance:
    algebra: BoundQuiverAlgebra
    dim: DimVector
    module: Representation
    provenance: dict
    certificates: dict
    pair: ExceptionalPair | None = None

    def to_json(self):
        data = {
            "schema_version": SCHEMA_VERSION,
            "algebra": serialize.algebra_to_json(self.algebra),
            "dim": dict(self.dim.entries),
            "module": serialize.representation_to_json(self.module),
            "provenance": self.provenance,
            "certificates": self.certificates,
            "citations": {
                "singularity": "orbit closure neither unibranch nor Cohen-Macaulay "
                "(cited conclusion, not a computed fact)",
            },
        }
        if self.pair is not None:
            data["pair"] = pair_to_json(self.pair)
        return data


def pair_to_json(pair):
    return {
        "schema_version": SCHEMA_VERSION,
        "E1": serialize.representation_to_json(pair.e1),
        "E2": serialize.representation_to_json(pair.e2),
        "cocycles": [
            {a: serialize.matrix_to_json(m) for a, m in z.items()}
            for z in pair.cocycles.basis
        ],
        "quotient": serialize.algebra_to_json(pair.quotient),
        "provenance": {k: list(v) if isinstance(v, tuple) else v
                       for k, v in pair.provenance.items()},
        "certificates": {
            "end_dims": pair.report.end_dims,
            "ext1_21": pair.report.table[(1, 0)].ext1,
            "ext2_21_inferred": pair.report.table[(1, 0)].ext2_inferred,
        },
    }


def pair_from_json(algebra, data):
    from quiverforge.homology import ExtCocycleBasis

    e1 = serialize.representation_from_json(algebra, data["E1"])
    e2 = serialize.representation_from_json(algebra, data["E2"])
    quotient = serialize.algebra_from_json(data["quotient"])
    cocycles = ExtCocycleBasis(
        dim=len(data["cocycles"]),
        basis=[
            {a: serialize.matrix_from_json(m) for a, m in z.items()}
            for z in data["cocycles"]
        ],
    )
    from quiverforge.exceptional import verify_orthogonal_exceptional

    report = verify_orthogonal_exceptional(algebra, [e1, e2])
    return ExceptionalPair(
        algebra=algebra,
        e1=e1,
        e2=e2,
        report=report,
        cocycles=cocycles,
        quotient=quotient,
        provenance=dict(data.get("provenance", {})),
    )


def build_bad_orbit_instance(algebra, seed=7):
    """Run the whole construction over a tame hereditary / concealed algebra."""
    zw = zwara_module()
    if is_kronecker_shaped(algebra):
        module = zwara_module(algebra)
        certificates = {
            "base_case": True,
            "end_dim": end_dim(module),
            "end_dim_zwara": end_dim(zw),
            "orbit_dimension": orbit_dimension(module),
        }
        return BadOrbitInstance(
            algebra=algebra,
            dim=module.dim,
            module=module,
            provenance={"seed": seed, "base_case": True},
            certificates=certificates,
        )
    pair = find_orthogonal_pair(algebra, seed=seed)
    mprime = quotient_module_from_kronecker(pair, zw)
    module = lift(pair, mprime)
    expected = pair.e1.dim.scale(3) + pair.e2.dim.scale(3)
    if module.dim != expected:
        raise StageError("lift", "dimension identity d = 3 dim E1 + 3 dim E2 failed")
    if any(module.dim[v] <= 0 for v in module.dim.entries
           if find_isotropic_root(algebra)[v] > 0):
        raise StageError("lift", "instance dimension vanishes on the support of h")
    ez = end_dim(zw)
    em = end_dim(module)
    certificates = {
        "base_case": False,
        "end_dim": em,
        "end_dim_zwara": ez,
        "end_dim_preserved": em == ez,
        "orbit_dimension": orbit_dimension(module),
        "hom_fidelity_self": hom_space(mprime, mprime).dim == hom_space(module, module).dim,
        "ext1_fidelity_self": ext1_space(mprime, mprime).dim == ext1_space(module, module).dim,
        "theta_h_signs": {
            "h1": int(Weight(dict(zip(sorted(algebra.quiver.vertex_order),
                                      pair.provenance["theta_h"])))(pair.e1.dim)),
            "h2": int(Weight(dict(zip(sorted(algebra.quiver.vertex_order),
                                      pair.provenance["theta_h"])))(pair.e2.dim)),
        },
        "n1": pair.provenance["n1"],
        "n2": pair.provenance["n2"],
        "l": pair.provenance["l"],
    }
    if not certificates["end_dim_preserved"]:
        raise StageError("certificates", "end_dim(lift) != end_dim(Zwara)")
    return BadOrbitInstance(
        algebra=algebra,
        dim=module.dim,
        module=module,
        provenance={"seed": seed, "base_case": False, **{
            k: (list(v) if isinstance(v, tuple) else v)
            for k, v in pair.provenance.items()
        }},
        certificates=certificates,
        pair=pair,
    )


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)  # (name, ok, detail)

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self):
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c[1]]


def verify_instance_json(data):
    """Re-run every certificate of a stored instance from its own data."""
    report = VerificationReport()
    algebra = serialize.algebra_from_json(data["algebra"])
    module = serialize.representation_from_json(algebra, data["module"])
    validity = module.validate()
    report.add("module-validates", validity.ok, str(validity) if not validity.ok else "")
    report.add("dim-recorded", dict(module.dim.entries) == {
        str(k): int(v) for k, v in data["dim"].items()
    })
    zw = zwara_module()
    ez = end_dim(zw)
    if data["certificates"].get("base_case"):
        report.add("end-dim-zwara", end_dim(module) == ez,
                   f"end_dim {end_dim(module)} vs {ez}")
        report.add(
            "orbit-dimension",
            orbit_dimension(module) == data["certificates"]["orbit_dimension"],
        )
        return report
    pair = pair_from_json(algebra, data["pair"])
    report.add("pair-conditions", pair.report.ok, str(pair.report.failures))
    back = pair.report.table[(1, 0)]
    report.add("ext1-e2-e1", back.ext1 == 2, f"ext1 = {back.ext1}")
    report.add("ext2-e2-e1", back.ext2_inferred == 0, f"ext2 = {back.ext2_inferred}")
    h = find_isotropic_root(algebra)
    theta_h = defect_weight(algebra, h)
    report.add("theta-h-sign-e1", theta_h(pair.e1.dim) < 0, f"{theta_h(pair.e1.dim)}")
    report.add("theta-h-sign-e2", theta_h(pair.e2.dim) > 0, f"{theta_h(pair.e2.dim)}")
    report.add(
        "pair-arithmetic",
        data["provenance"].get("n1") == 1
        and data["provenance"].get("n2") == 1
        and data["provenance"].get("l") == 2,
    )
    expected = pair.e1.dim.scale(3) + pair.e2.dim.scale(3)
    report.add("dim-identity", module.dim == expected)
    em = end_dim(module)
    report.add("end-dim-preserved", em == ez, f"{em} vs {ez}")
    report.add(
        "orbit-dimension",
        orbit_dimension(module)
        == sum(x * x for x in module.dim.entries.values()) - em,
    )
    relifted = lift(pair, quotient_module_from_kronecker(pair, zw))
    same = all(
        serialize.matrix_to_json(relifted.matrices[a])
        == serialize.matrix_to_json(module.matrices[a])
        for a in algebra.quiver.arrow_order
    ) and relifted.dim == module.dim
    report.add("lift-reproducible", same)
    return report
