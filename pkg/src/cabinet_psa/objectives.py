"""Layout evaluation: total interconnect wire length and the heat-placement penalty.

Wire length is the Manhattan distance between component centres summed over
the undirected wire set; cabinet wiring runs in ducts along horizontal and
vertical channels, so rectilinear distance is the honest measure. The heat
penalty sums, over heat-dissipating components, the depth of their centre
below the cabinet top divided by 100 mm: hot components mounted high score
low, which matches the rule that warm air must leave past as few neighbours
as possible.
"""

from __future__ import annotations

from .model import CabinetSpec, Component, Edge, ObjectiveVector, normalize_edges, validate_components
from .placement import ComponentTooWide, Layout, Placement, component_center

# Millimetres of hot-component centre depth per heat unit. Keeps heat within a
# couple of orders of magnitude of wire length so weighted sums stay tame.
HEAT_SCALE_MM = 100.0


class EvaluationContext:
    """Precomputed per-cabinet arrays for repeated layout evaluation.

    Read-only after construction and safe to share across threads. The fast
    path ``evaluate_order`` performs the same arithmetic as pack() followed by
    wire_length() and heat_level(), without building Placement objects.
    """

    def __init__(self, components: list[Component], cabinet: CabinetSpec):
        comps = sorted(validate_components(list(components)), key=lambda c: c.index)
        for comp in comps:
            if comp.width_mm > cabinet.usable_width_mm:
                raise ComponentTooWide(comp.index, comp.width_mm, cabinet.usable_width_mm)
        self.components: tuple[Component, ...] = tuple(comps)
        self.cabinet = cabinet
        self.edges: tuple[Edge, ...] = tuple(sorted(normalize_edges(comps)))
        self.n = len(comps)
        widths = [0.0] * (self.n + 1)
        heights = [0.0] * (self.n + 1)
        for comp in comps:
            widths[comp.index] = comp.width_mm
            heights[comp.index] = comp.height_mm
        self._widths = widths
        self._heights = heights
        self._hot = tuple(c.index for c in comps if c.is_hot)
        self._edge_pairs = tuple((e.a, e.b) for e in self.edges)

    def evaluate_order(self, order: tuple[int, ...]) -> tuple[float, float]:
        """(heat, wire_mm) for a raw permutation of 1..n; the engine hot path."""
        widths = self._widths
        heights = self._heights
        usable = self.cabinet.usable_width_mm
        gap = self.cabinet.row_gap_mm
        cx = [0.0] * (self.n + 1)
        cy = [0.0] * (self.n + 1)
        x = 0.0
        top = 0.0
        row_height = 0.0
        for index in order:
            w = widths[index]
            h = heights[index]
            if x + w > usable and x > 0.0:
                top = top + row_height + gap
                x = 0.0
                row_height = 0.0
            cx[index] = x + 0.5 * w
            cy[index] = top + 0.5 * h
            x += w
            if h > row_height:
                row_height = h
        heat = 0.0
        for index in self._hot:
            heat += cy[index] / HEAT_SCALE_MM
        wire = 0.0
        for a, b in self._edge_pairs:
            wire += abs(cx[a] - cx[b]) + abs(cy[a] - cy[b])
        return heat, wire


def wire_length(placement: Placement, edges: set[Edge]) -> float:
    """Total Manhattan wire length over the edge set, centre to centre.

    Edges are summed in sorted order so the result is bit-stable regardless of
    set iteration order.
    """
    total = 0.0
    for edge in sorted(edges):
        ax, ay = component_center(placement, edge.a)
        bx, by = component_center(placement, edge.b)
        total += abs(ax - bx) + abs(ay - by)
    return total


def heat_level(placement: Placement, components: list[Component]) -> float:
    """Heat-placement penalty: centre depth of each hot component over 100 mm."""
    total = 0.0
    for comp in sorted(components, key=lambda c: c.index):
        if comp.is_hot:
            placed = placement.component(comp.index)
            total += (placed.y_mm + 0.5 * placed.height_mm) / HEAT_SCALE_MM
    return total


def evaluate(layout: Layout, ctx: EvaluationContext) -> ObjectiveVector:
    """Pack the layout and return its (heat, wire length) objective vector."""
    heat, wire = ctx.evaluate_order(layout.order)
    return ObjectiveVector(heat, wire)
