"""Shelf packing: turn a layout permutation into physical DIN-rail coordinates.

Components walk left to right in layout order; a component that would cross
the usable width opens a new row below. Row height is the tallest member,
component tops align to the row top, and rows stack downward separated by the
cabinet's rail gap. The packer is a pure function: one permutation, one
placement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import CabinetError, CabinetSpec, Component


@dataclass(frozen=True, slots=True)
class Layout:
    """Search-space point: the order components are fed to the row packer."""

    order: tuple[int, ...]


class ComponentTooWide(CabinetError):
    """A component is wider than the cabinet's usable rail width."""

    def __init__(self, index: int, width_mm: float, usable_width_mm: float):
        self.index = index
        self.width_mm = width_mm
        self.usable_width_mm = usable_width_mm
        super().__init__(
            f"component {index} is {width_mm} mm wide, cabinet usable width is {usable_width_mm} mm"
        )


class UnknownIndex(CabinetError):
    """Lookup of a component index that is not part of the placement."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"component index {index} is not placed")


@dataclass(frozen=True, slots=True)
class PlacedComponent:
    index: int
    x_mm: float  # left edge
    y_mm: float  # top edge, measured downward from the cabinet top
    row: int  # 0-based row index
    width_mm: float
    height_mm: float


@dataclass(frozen=True, slots=True)
class PlacementRow:
    y_mm: float
    height_mm: float


@dataclass(frozen=True, slots=True)
class Placement:
    """Physical realization of one layout: coordinates per component plus row geometry."""

    components: tuple[PlacedComponent, ...]  # in layout order
    rows: tuple[PlacementRow, ...]
    total_height_mm: float
    usable_width_mm: float

    def component(self, index: int) -> PlacedComponent:
        for placed in self.components:
            if placed.index == index:
                return placed
        raise UnknownIndex(index)


def pack(layout: Layout, components: list[Component], cabinet: CabinetSpec) -> Placement:
    """Greedy shelf packing of ``layout`` onto rows of ``cabinet``.

    A component whose right edge lands exactly on the usable width stays in
    its row; only a strict overshoot opens a new row. Deterministic by
    construction. Raises ComponentTooWide if any single component cannot fit.
    """
    usable = cabinet.usable_width_mm
    gap = cabinet.row_gap_mm
    by_index = {c.index: c for c in components}
    for comp in components:
        if comp.width_mm > usable:
            raise ComponentTooWide(comp.index, comp.width_mm, usable)

    placed: list[PlacedComponent] = []
    rows: list[PlacementRow] = []
    x = 0.0
    top = 0.0
    row_height = 0.0
    row_no = 0
    for index in layout.order:
        comp = by_index[index]
        w = comp.width_mm
        h = comp.height_mm
        if x + w > usable and x > 0.0:
            rows.append(PlacementRow(top, row_height))
            top = top + row_height + gap
            x = 0.0
            row_height = 0.0
            row_no += 1
        placed.append(PlacedComponent(index, x, top, row_no, w, h))
        x += w
        if h > row_height:
            row_height = h
    rows.append(PlacementRow(top, row_height))
    return Placement(tuple(placed), tuple(rows), top + row_height, usable)


def component_center(placement: Placement, index: int) -> tuple[float, float]:
    """Geometric centre (cx, cy) of a placed component, in cabinet coordinates."""
    placed = placement.component(index)
    return placed.x_mm + 0.5 * placed.width_mm, placed.y_mm + 0.5 * placed.height_mm


def total_configurations(n: int) -> int:
    """Size of the search space for n components: n! distinct feed orders."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return math.factorial(n)
