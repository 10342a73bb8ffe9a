"""Exceptional pairs, the quotient algebra, and the lift functor."""

import random

import pytest

from quiverforge import linalg
from quiverforge.core import DimVector, Representation, simple_representation, zero_representation
from quiverforge.exceptional import (
    StageError,
    build_quotient_algebra,
    construct_exceptional,
    find_orthogonal_pair,
    lift,
    verify_orthogonal_exceptional,
)
from quiverforge.forms import defect_weight, euler_form, find_isotropic_root
from quiverforge.homology import end_dim, ext1_space, hom_space
from conftest import d4_subspace_algebra, random_module


@pytest.fixture(scope="module")
def d4_pair():
    return find_orthogonal_pair(d4_subspace_algebra(), seed=7)


def test_construct_exceptional_simple_arm():
    d4 = d4_subspace_algebra()
    r = DimVector({"0": 0, "1": 1, "2": 0, "3": 0, "4": 0})
    e = construct_exceptional(d4, r)
    assert end_dim(e) == 1
    assert ext1_space(e, e).dim == 0


def test_construct_exceptional_rejects_non_real_root():
    d4 = d4_subspace_algebra()
    with pytest.raises(StageError):
        construct_exceptional(d4, find_isotropic_root(d4))  # q = 0, not 1


def test_find_orthogonal_pair_four_subspace(d4_pair):
    pair = d4_pair
    order = pair.algebra.quiver.vertex_order
    assert pair.e1.dim.as_tuple(order) == (2, 0, 1, 1, 1)
    assert pair.e2.dim.as_tuple(order) == (0, 1, 0, 0, 0)
    assert pair.cocycles.dim == 2
    assert pair.report.ok
    assert pair.provenance["n1"] == 1
    assert pair.provenance["n2"] == 1
    assert pair.provenance["l"] == 2
    theta_h = defect_weight(pair.algebra, find_isotropic_root(pair.algebra))
    assert theta_h(pair.e1.dim) < 0 < theta_h(pair.e2.dim)


def test_pair_homological_certificates(d4_pair):
    pair = d4_pair
    algebra = pair.algebra
    assert hom_space(pair.e1, pair.e2).dim == 0
    assert ext1_space(pair.e1, pair.e2).dim == 0
    assert hom_space(pair.e2, pair.e1).dim == 0
    assert ext1_space(pair.e2, pair.e1).dim == 2
    assert euler_form(algebra, pair.e2.dim, pair.e1.dim) == -2
    assert euler_form(algebra, pair.e1.dim, pair.e2.dim) == 0


def test_verify_rejects_swapped_order(d4_pair):
    report = verify_orthogonal_exceptional(d4_pair.algebra, [d4_pair.e2, d4_pair.e1])
    assert not report.ok
    assert any(cond == "forward-vanishing" for cond, _, _ in report.failures)


def test_verify_rejects_repeated_module(d4_pair):
    report = verify_orthogonal_exceptional(d4_pair.algebra, [d4_pair.e1, d4_pair.e1])
    assert not report.ok


def test_build_quotient_algebra():
    q2 = build_quotient_algebra(2)
    assert q2.quiver.vertex_order == ["1", "2"]
    assert q2.quiver.arrow_order == ["x", "y"]
    assert all(a.tail == "2" and a.head == "1" for a in q2.quiver.arrows)
    assert q2.hereditary
    q3 = build_quotient_algebra(3)
    assert q3.quiver.arrow_order == ["x", "y", "z"]
    with pytest.raises(StageError):
        build_quotient_algebra(2, inferred_ext2=1)


def test_lift_zero_module(d4_pair):
    lifted = lift(d4_pair, zero_representation(d4_pair.quotient))
    assert lifted.dim.is_zero()


def test_lift_of_quotient_simples_recovers_the_pair(d4_pair):
    # vertex "1" of the quotient carries E1, vertex "2" carries E2
    l1 = lift(d4_pair, simple_representation(d4_pair.quotient, "1"))
    assert l1.dim == d4_pair.e1.dim
    for a in d4_pair.algebra.quiver.arrow_order:
        assert linalg.mat_eq(l1.matrices[a], d4_pair.e1.matrices[a])
    l2 = lift(d4_pair, simple_representation(d4_pair.quotient, "2"))
    assert l2.dim == d4_pair.e2.dim
    for a in d4_pair.algebra.quiver.arrow_order:
        assert linalg.mat_eq(l2.matrices[a], d4_pair.e2.matrices[a])


def test_lift_dimension_is_linear(d4_pair):
    mprime = Representation(
        d4_pair.quotient, {"1": 2, "2": 3}, {"x": [[1, 0, 0], [0, 1, 0]], "y": [[0, 0, 0], [0, 0, 1]]}
    )
    lifted = lift(d4_pair, mprime)
    assert lifted.dim == d4_pair.e1.dim.scale(2) + d4_pair.e2.dim.scale(3)
    assert lifted.validate().ok


def test_cocycle_middle_terms_are_nonsplit(d4_pair):
    """Each basis cocycle builds an extension of E2 by E1 with no section."""
    pair = d4_pair
    e1, e2 = pair.e1, pair.e2
    split_dim = hom_space(e2, e1).dim + end_dim(e2)  # hom into a split middle term
    for z in pair.cocycles.basis:
        dim = DimVector({v: e1.dim[v] + e2.dim[v] for v in e1.dim.entries})
        mats = {}
        for a in pair.algebra.quiver.arrows:
            top = linalg.hstack([e1.matrices[a.name], z[a.name]])
            bot = linalg.hstack(
                [
                    linalg.zeros(e2.dim[a.head], e1.dim[a.tail]),
                    e2.matrices[a.name],
                ]
            )
            mats[a.name] = linalg.vstack([m for m in (top, bot) if m])
        middle = Representation(pair.algebra, dim, mats)
        assert middle.validate().ok
        assert hom_space(e2, middle).dim < split_dim


def test_lift_preserves_hom_and_ext_pairwise(d4_pair, rng):
    quotient = d4_pair.quotient
    modules = []
    for _ in range(4):
        dim = DimVector({"1": rng.randint(0, 3), "2": rng.randint(0, 3)})
        modules.append(random_module(quotient, dim, rng))
    lifted = [lift(d4_pair, m) for m in modules]
    for i, mi in enumerate(modules):
        for j, mj in enumerate(modules):
            assert hom_space(mi, mj).dim == hom_space(lifted[i], lifted[j]).dim
            assert ext1_space(mi, mj).dim == ext1_space(lifted[i], lifted[j]).dim
