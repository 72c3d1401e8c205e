import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra.burau import RowVector
from src.algebra.laurent import CoeffRing
from src.certify.regions import Region, region_member
from strategies import vectors

Z2 = CoeffRing(2)


def test_membership_examples():
    assert not region_member(Region.V0, RowVector.of(Z2, 1, 0))
    assert region_member(Region.V0, RowVector.of(Z2, 1, "t"))
    assert region_member(Region.VY, RowVector.of(Z2, 0, 0, 1))
    ties = RowVector.of(Z2, 0, "t", "t")
    assert region_member(Region.VX, ties)
    assert not region_member(Region.VY, ties)


def test_zero_vector_is_in_no_region():
    assert not region_member(Region.V0, RowVector.of(Z2, 0, 0))
    assert not region_member(Region.VX, RowVector.of(Z2, 0, 0, 0))
    assert not region_member(Region.VY, RowVector.of(Z2, 0, 0, 0))


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        region_member(Region.V0, RowVector.of(Z2, 1, 0, 0))
    with pytest.raises(ValueError):
        region_member(Region.VX, RowVector.of(Z2, 1, 0))


def test_labels():
    assert Region.from_label("V_X") is Region.VX
    assert Region.from_label("VY") is Region.VY
    with pytest.raises(ValueError):
        Region.from_label("V_Z")


@given(st.data())
def test_vx_and_vy_are_disjoint(data):
    ring = data.draw(st.sampled_from([CoeffRing(2), CoeffRing(3), CoeffRing(0)]))
    v = data.draw(vectors(ring, 3))
    assert not (region_member(Region.VX, v) and region_member(Region.VY, v))
