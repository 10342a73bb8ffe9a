"""Command line interface.

Exit codes: 0 success/decided, 1 input error, 2 certificate failure,
3 undecided stability subproblem.  All JSON outputs carry schema_version.
"""

import argparse
import json
import sys
from fractions import Fraction

from quiverforge import serialize
from quiverforge.core import DimVector, QuiverError
from quiverforge.cones import ConeError
from quiverforge.exceptional import StageError, find_orthogonal_pair, lift
from quiverforge.forms import FormError, Weight, euler_form, find_isotropic_root, tits_form
from quiverforge.genericrep import (
    GenericRepError,
    effective_cone,
    facet_stable_pair,
)
from quiverforge.homology import ext1_space, hom_space
from quiverforge.pipeline import (
    build_bad_orbit_instance,
    pair_from_json,
    pair_to_json,
    verify_instance_json,
    zwara_module,
)
from quiverforge.serialize import SCHEMA_VERSION
from quiverforge.stability import UndecidedError, is_semistable, is_stable

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CERT = 2
EXIT_UNDECIDED = 3


class InputError(ValueError):
    pass


def _load_algebra(path):
    return serialize.algebra_from_json(serialize.load_path(path))


def _load_rep(algebra, path):
    rep = serialize.representation_from_json(algebra, serialize.load_path(path))
    report = rep.validate()
    if not report.ok:
        raise InputError(f"{path}: representation invalid: {report}")
    return rep


def _parse_vector(algebra, text):
    parts = [p.strip() for p in text.split(",")]
    order = algebra.quiver.vertex_order
    if len(parts) != len(order):
        raise InputError(
            f"vector {text!r} has {len(parts)} entries; expected {len(order)} "
            f"(canonical vertex order {order})"
        )
    return dict(zip(order, parts))


def _emit(payload, out=None):
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    text = serialize.dumps(payload)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_hom(args):
    algebra = _load_algebra(args.algebra)
    m = _load_rep(algebra, args.m)
    n = _load_rep(algebra, args.n)
    basis = hom_space(m, n)
    _emit(
        {
            "dim": basis.dim,
            "basis": [
                {v: serialize.matrix_to_json(mat) for v, mat in phi.items()}
                for phi in basis.basis
            ],
        },
        args.output,
    )
    return EXIT_OK


def cmd_ext1(args):
    algebra = _load_algebra(args.algebra)
    m = _load_rep(algebra, args.m)
    n = _load_rep(algebra, args.n)
    basis = ext1_space(m, n)
    _emit(
        {
            "dim": basis.dim,
            "basis": [
                {a: serialize.matrix_to_json(mat) for a, mat in z.items()}
                for z in basis.basis
            ],
        },
        args.output,
    )
    return EXIT_OK


def cmd_forms(args):
    algebra = _load_algebra(args.algebra)
    out = {}
    if args.euler:
        d = DimVector(_parse_vector(algebra, args.euler[0]))
        e = DimVector(_parse_vector(algebra, args.euler[1]))
        out["euler"] = euler_form(algebra, d, e)
    if args.tits:
        out["tits"] = tits_form(algebra, DimVector(_parse_vector(algebra, args.tits)))
    if args.isotropic:
        h = find_isotropic_root(algebra)
        out["isotropic_root"] = dict(h.entries)
    if not out:
        raise InputError("forms: nothing requested (use --euler/--tits/--isotropic)")
    _emit(out, args.output)
    return EXIT_OK


def cmd_stability(args):
    algebra = _load_algebra(args.algebra)
    m = _load_rep(algebra, args.m)
    theta = Weight(
        {v: Fraction(x) for v, x in _parse_vector(algebra, args.theta).items()}
    )
    check = is_stable if args.stable else is_semistable
    verdict = check(m, theta, seed=args.seed)
    payload = {"status": verdict.status, "detail": verdict.detail}
    if verdict.witness_dim is not None:
        payload["witness_dim"] = dict(verdict.witness_dim.entries)
    if verdict.witness is not None:
        payload["witness"] = {
            v: serialize.matrix_to_json(u) for v, u in verdict.witness.items()
        }
    _emit(payload, args.output)
    return EXIT_OK


def cmd_effcone(args):
    algebra = _load_algebra(args.algebra)
    if args.dim:
        d = DimVector(_parse_vector(algebra, args.dim))
    else:
        d = find_isotropic_root(algebra)
    cone = effective_cone(algebra, d)
    order = algebra.quiver.vertex_order
    facets = [
        {
            "rays": [[str(x) for x in r] for r in f.rays],
            "tight_subdims": [
                list(cone.generic_subdims[i].as_tuple(order)) for i in f.tight
            ],
        }
        for f in cone.facets
    ]
    _emit(
        {
            "d": dict(d.entries),
            "vertex_order": order,
            "dim": cone.dim,
            "rays": [[str(x) for x in r] for r in cone.cone.rays],
            "generic_subdims": [list(e.as_tuple(order)) for e in cone.generic_subdims],
            "facets": facets,
        },
        args.output,
    )
    return EXIT_OK


def cmd_stablepair(args):
    algebra = _load_algebra(args.algebra)
    h = find_isotropic_root(algebra)
    theta0 = Weight(
        {v: Fraction(x) for v, x in _parse_vector(algebra, args.theta0).items()}
    )
    pairs = facet_stable_pair(algebra, h, theta0, all_pairs=args.all)
    if not args.all:
        pairs = [pairs]
    _emit(
        {
            "h": dict(h.entries),
            "pairs": [
                {
                    "h1": dict(p.h1.entries),
                    "h2": dict(p.h2.entries),
                    "n1": p.n1,
                    "n2": p.n2,
                    "l": p.l,
                }
                for p in pairs
            ],
        },
        args.output,
    )
    return EXIT_OK


def cmd_pair(args):
    algebra = _load_algebra(args.algebra)
    pair = find_orthogonal_pair(algebra, seed=args.seed)
    _emit(pair_to_json(pair), args.output)
    return EXIT_OK


def cmd_lift(args):
    algebra = _load_algebra(args.algebra)
    pair = pair_from_json(algebra, serialize.load_path(args.pair))
    mprime = serialize.representation_from_json(
        pair.quotient, serialize.load_path(args.mprime)
    )
    lifted = lift(pair, mprime)
    _emit(serialize.representation_to_json(lifted), args.output)
    return EXIT_OK


def cmd_theorem11(args):
    algebra = _load_algebra(args.algebra)
    instance = build_bad_orbit_instance(algebra, seed=args.seed)
    _emit(instance.to_json(), args.output)
    return EXIT_OK


def cmd_verify(args):
    data = serialize.load_path(args.instance)
    report = verify_instance_json(data)
    _emit(
        {
            "ok": report.ok,
            "checks": [
                {"name": name, "ok": ok, "detail": detail}
                for name, ok, detail in report.checks
            ],
        },
        args.output,
    )
    return EXIT_OK if report.ok else EXIT_CERT


def cmd_zwara(args):
    _emit(serialize.representation_to_json(zwara_module()), args.output)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quiverforge",
        description="Exact invariants of bound quiver algebra representations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *specs, seed=False, output=True):
        p = sub.add_parser(name)
        for spec in specs:
            p.add_argument(*spec[0], **spec[1])
        if seed:
            p.add_argument("--seed", type=int, default=7)
        if output:
            p.add_argument("-o", "--output", default=None)
        p.set_defaults(fn=fn)
        return p

    add("hom", cmd_hom, (["algebra"], {}), (["m"], {}), (["n"], {}))
    add("ext1", cmd_ext1, (["algebra"], {}), (["m"], {}), (["n"], {}))
    add(
        "forms",
        cmd_forms,
        (["algebra"], {}),
        (["--euler"], {"nargs": 2, "metavar": ("D", "E")}),
        (["--tits"], {"metavar": "D"}),
        (["--isotropic"], {"action": "store_true"}),
    )
    add(
        "stability",
        cmd_stability,
        (["algebra"], {}),
        (["m"], {}),
        (["--theta"], {"required": True}),
        (["--stable"], {"action": "store_true"}),
        seed=True,
    )
    add("effcone", cmd_effcone, (["algebra"], {}), (["--dim"], {"default": None}))
    add(
        "stablepair",
        cmd_stablepair,
        (["algebra"], {}),
        (["--theta0"], {"required": True}),
        (["--all"], {"action": "store_true"}),
    )
    add("pair", cmd_pair, (["algebra"], {}), seed=True)
    add("lift", cmd_lift, (["algebra"], {}), (["pair"], {}), (["mprime"], {}))
    add("theorem11", cmd_theorem11, (["algebra"], {}), seed=True)
    add("verify", cmd_verify, (["instance"], {}))
    add("zwara", cmd_zwara)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UndecidedError as exc:
        print(f"UNDECIDED: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except StageError as exc:
        print(f"pipeline failure: {exc}", file=sys.stderr)
        return EXIT_CERT if exc.stage in ("certificates", "pair-verification") else EXIT_INPUT
    except (
        InputError,
        QuiverError,
        FormError,
        GenericRepError,
        ConeError,
        FileNotFoundError,
        json.JSONDecodeError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
