"""Shared algebras and modules used across the test suite."""

import random
from fractions import Fraction

import pytest

from quiverforge.core import BoundQuiverAlgebra, Quiver, Representation
from quiverforge.pipeline import kronecker_algebra


def d4_subspace_algebra():
    """Four-subspace quiver: arms 1..4 all mapping into the center 0."""
    quiver = Quiver(
        ["0", "1", "2", "3", "4"],
        [("a1", "1", "0"), ("a2", "2", "0"), ("a3", "3", "0"), ("a4", "4", "0")],
    )
    return BoundQuiverAlgebra(quiver, gldim_bound=1, name="four-subspace")


def a3_cycle_algebra():
    """Three vertices, acyclic orientation of the extended-A triangle."""
    quiver = Quiver(
        ["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "1", "3")]
    )
    return BoundQuiverAlgebra(quiver, gldim_bound=1, name="triangle")


def dynkin_d4_algebra():
    """Three-subspace star; representation-finite, no isotropic root."""
    quiver = Quiver(
        ["0", "1", "2", "3"], [("a1", "1", "0"), ("a2", "2", "0"), ("a3", "3", "0")]
    )
    return BoundQuiverAlgebra(quiver, gldim_bound=1, name="three-subspace")


def commutative_square_algebra():
    """Square with one commutativity relation; gldim 2."""
    quiver = Quiver(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
    )
    relation = [(Fraction(1), ("a", "b")), (Fraction(-1), ("c", "d"))]
    return BoundQuiverAlgebra(quiver, [relation], gldim_bound=2, name="square")


def four_lines_module(algebra):
    """Dimension (2;1,1,1,1) module whose four arm images are distinct lines."""
    dim = {"0": 2, "1": 1, "2": 1, "3": 1, "4": 1}
    mats = {
        "a1": [[1], [0]],
        "a2": [[0], [1]],
        "a3": [[1], [1]],
        "a4": [[1], [2]],
    }
    return Representation(algebra, dim, mats)


def regular_k2_module(algebra, lam=1):
    """Regular dimension (1,1) Kronecker module with slope parameter lam."""
    return Representation(algebra, {"1": 1, "2": 1}, {"a": [[1]], "b": [[lam]]})


def random_module(algebra, dim, rng, bound=3):
    """Seeded random point of mod(A, dim); valid as-is for hereditary A."""
    mats = {}
    for a in algebra.quiver.arrows:
        rows, cols = dim[a.head], dim[a.tail]
        mats[a.name] = [
            [Fraction(rng.randint(-bound, bound)) for _ in range(cols)]
            for _ in range(rows)
        ]
    return Representation(algebra, dim, mats)


@pytest.fixture
def k2():
    return kronecker_algebra()


@pytest.fixture
def d4():
    return d4_subspace_algebra()


@pytest.fixture
def square():
    return commutative_square_algebra()


@pytest.fixture
def rng():
    return random.Random(20260824)
