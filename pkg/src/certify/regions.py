"""Degree-defined regions used by the ping-pong arguments."""

from enum import Enum

from ..algebra.burau import RowVector


class Region(Enum):
    V0 = "V_0"
    VX = "V_X"
    VY = "V_Y"

    @property
    def dimension(self) -> int:
        return 2 if self is Region.V0 else 3

    @classmethod
    def from_label(cls, label: str) -> "Region":
        for region in cls:
            if region.value == label or region.name == label:
                return region
        raise ValueError(f"unknown region {label!r}")


def region_member(region: Region, vector: RowVector) -> bool:
    """
    V_0 = {(f, g): deg f < deg g}
    V_X = {(f, g, h): deg g > deg f, deg g >= deg h}
    V_Y = {(f, g, h): deg h > deg f, deg h > deg g}

    deg 0 is -inf, so a zero coordinate never wins a strict comparison.
    """
    if len(vector) != region.dimension:
        raise ValueError(f"{region.value} holds {region.dimension}-vectors, got {len(vector)}")
    degrees = [c.degree() for c in vector]
    if region is Region.V0:
        f, g = degrees
        return f < g
    f, g, h = degrees
    if region is Region.VX:
        return g > f and g >= h
    return h > f and h > g
