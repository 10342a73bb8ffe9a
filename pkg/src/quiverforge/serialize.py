"""JSON serialization: algebras, representations, weights, pairs, instances.

Rationals are written as "p/q" strings (integers may omit "/q").  Dumps are
canonical: sorted keys, fixed separators, so identical data is byte-identical.
"""

import json
from fractions import Fraction

from quiverforge.core import BoundQuiverAlgebra, DimVector, Quiver, Representation

SCHEMA_VERSION = 1


def frac_to_str(x):
    return str(Fraction(x))


def frac_from_str(s):
    return Fraction(s)


def matrix_to_json(m):
    return [[frac_to_str(x) for x in row] for row in m]


def matrix_from_json(m):
    return [[frac_from_str(x) for x in row] for row in m]


def algebra_to_json(algebra):
    data = {
        "vertices": list(algebra.quiver.vertices),
        "arrows": [
            {"id": a.name, "tail": a.tail, "head": a.head}
            for a in algebra.quiver.arrows
        ],
        "relations": [
            {
                "terms": [
                    {"coeff": frac_to_str(c), "path": list(p)} for c, p in rel.terms
                ]
            }
            for rel in algebra.relations
        ],
    }
    if algebra.gldim_bound is not None:
        data["gldim_bound"] = algebra.gldim_bound
    if algebra.name:
        data["name"] = algebra.name
    return data


def algebra_from_json(data):
    quiver = Quiver(
        data["vertices"],
        [(a["id"], a["tail"], a["head"]) for a in data.get("arrows", [])],
    )
    relations = [
        [(frac_from_str(t["coeff"]), tuple(t["path"])) for t in rel["terms"]]
        for rel in data.get("relations", [])
    ]
    return BoundQuiverAlgebra(
        quiver,
        relations,
        gldim_bound=data.get("gldim_bound"),
        name=data.get("name", ""),
    )


def representation_to_json(rep):
    return {
        "dim": dict(rep.dim.entries),
        "matrices": {a: matrix_to_json(m) for a, m in rep.matrices.items()},
    }


def representation_from_json(algebra, data):
    dim = DimVector(data["dim"])
    mats = {a: matrix_from_json(m) for a, m in data.get("matrices", {}).items()}
    return Representation(algebra, dim, mats)


def weight_to_json(theta):
    return {v: frac_to_str(x) for v, x in theta.entries.items()}


def dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def dump_path(obj, path):
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def load_path(path):
    with open(path) as fh:
        return json.load(fh)
