"""Quivers, representations, validation, serialization round trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverforge import serialize
from quiverforge.core import (
    DimVector,
    Quiver,
    QuiverError,
    Representation,
    direct_sum,
    simple_representation,
    zero_representation,
)
from quiverforge.homology import end_dim, hom_space
from quiverforge.pipeline import zwara_module
from conftest import commutative_square_algebra


def test_quiver_rejects_duplicate_and_unknown_ids():
    with pytest.raises(QuiverError):
        Quiver(["1", "1"], [])
    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [("a", "1", "9")])
    with pytest.raises(QuiverError):
        Quiver(["1", "2"], [("a", "1", "2"), ("a", "2", "1")])


def test_path_endpoints_and_composability():
    q = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    assert q.path_endpoints(("a", "b")) == ("1", "3")
    with pytest.raises(QuiverError):
        q.path_endpoints(("b", "a"))
    with pytest.raises(QuiverError):
        q.path_endpoints(("a", "zz"))


def test_zwara_shift_matrix_is_nilpotent():
    from quiverforge import linalg

    m = zwara_module()
    a = m.evaluate_path(("a",))
    assert a[1][0] == 1 and a[2][1] == 1
    # a is not composable with itself over this quiver; the nilpotency of
    # the shift is a matrix-power fact
    with pytest.raises(QuiverError):
        m.evaluate_path(("a", "a"))
    aa = linalg.matmul(a, a)
    assert aa[2][0] == 1
    assert sum(1 for row in aa for x in row if x != 0) == 1
    aaa = linalg.matmul(aa, a)
    assert all(x == 0 for row in aaa for x in row)


def test_trivial_path_is_identity():
    m = zwara_module()
    assert m.evaluate_path((), vertex="1") == [list(r) for r in
                                               [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]
    with pytest.raises(QuiverError):
        m.evaluate_path(())


def test_relation_validation_on_commutative_square():
    algebra = commutative_square_algebra()
    dim = {"1": 1, "2": 1, "3": 1, "4": 1}
    good = Representation(
        algebra, dim, {"a": [[1]], "b": [[2]], "c": [[2]], "d": [[1]]}
    )
    assert good.validate().ok
    bad = Representation(
        algebra, dim, {"a": [[1]], "b": [[2]], "c": [[1]], "d": [[1]]}
    )
    report = bad.validate()
    assert not report.ok
    assert report.relation_errors


def test_shape_validation():
    algebra = commutative_square_algebra()
    dim = {"1": 2, "2": 1, "3": 1, "4": 1}
    rep = Representation(algebra, dim, {"a": [[1]]})  # wrong shape at arrow a
    report = rep.validate()
    assert not report.ok
    assert any(name == "a" for name, _, _ in report.shape_errors)


def test_direct_sum_dims_and_end_dim(k2):
    s1 = simple_representation(k2, "1")
    both = direct_sum(s1, s1)
    assert both.dim == DimVector({"1": 2, "2": 0})
    assert end_dim(both) == 4
    z = zwara_module()
    zz = direct_sum(z, z)
    assert zz.dim == DimVector({"1": 6, "2": 6})
    assert hom_space(zz, zz).dim == 4 * end_dim(z)


def test_zero_representation_validates(k2):
    z = zero_representation(k2)
    assert z.validate().ok
    assert z.dim.is_zero()


def test_dim_vector_arithmetic_errors():
    with pytest.raises(QuiverError):
        DimVector({"1": -1})
    d = DimVector({"1": 2, "2": 3})
    assert (d + d).as_tuple(["1", "2"]) == (4, 6)
    assert d.scale(3).content() == 3
    assert d.is_indivisible()


def test_serialization_round_trip_is_exact(tmp_path, k2):
    rep = Representation(
        k2,
        {"1": 2, "2": 1},
        {"a": [[Fraction(2, 3), Fraction(-5, 7)]], "b": [[0, Fraction(11, 13)]]},
    )
    data = serialize.representation_to_json(rep)
    back = serialize.representation_from_json(k2, data)
    assert back.dim == rep.dim
    for a in k2.quiver.arrow_order:
        assert back.matrices[a] == rep.matrices[a]
    path = tmp_path / "rep.json"
    serialize.dump_path(data, path)
    assert serialize.load_path(path) == data


def test_algebra_round_trip():
    algebra = commutative_square_algebra()
    data = serialize.algebra_to_json(algebra)
    back = serialize.algebra_from_json(data)
    assert back.quiver.vertex_order == algebra.quiver.vertex_order
    assert back.quiver.arrow_order == algebra.quiver.arrow_order
    assert len(back.relations) == 1
    assert back.gldim_bound == 2
    assert serialize.algebra_to_json(back) == data


def test_canonical_dumps_is_byte_stable():
    payload = {"b": 1, "a": {"y": "2/3", "x": [1, 2]}}
    assert serialize.dumps(payload) == serialize.dumps(dict(reversed(payload.items())))


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=9), min_size=2, max_size=2),
    st.lists(st.integers(min_value=0, max_value=9), min_size=2, max_size=2),
    st.integers(min_value=0, max_value=5),
)
def test_dim_vector_algebra_properties(xs, ys, n):
    order = ["1", "2"]
    d = DimVector.from_tuple(xs, order)
    e = DimVector.from_tuple(ys, order)
    assert (d + e).as_tuple(order) == tuple(x + y for x, y in zip(xs, ys))
    assert d.scale(n).as_tuple(order) == tuple(n * x for x in xs)
    assert (d + e) - e == d
    assert (d <= d + e)
