"""Core cabinet data types, validation, wiring normalization and Pareto dominance."""

from __future__ import annotations

import math
from dataclasses import dataclass


class CabinetError(Exception):
    """Base class for every error raised by this package."""


@dataclass(frozen=True, slots=True)
class Component:
    """One cabinet element: front-panel dimensions, wiring adjacency, heat flag.

    Dimensions are millimetres. ``connects_to`` holds 1-based indices of the
    components this one is wired to; the direction is catalog bookkeeping only,
    a wire is one physical object. ``depth_mm`` is carried for catalog fidelity
    but ignored by the 2-D front-panel placement model. ``id`` is display
    metadata and may repeat across components; identity is ``index``.
    """

    index: int
    id: str
    width_mm: float
    height_mm: float
    depth_mm: float
    connects_to: tuple[int, ...] = ()
    is_hot: bool = False


@dataclass(frozen=True, slots=True)
class CabinetSpec:
    """Mounting panel geometry: usable rail width and vertical gap between rails."""

    usable_width_mm: float = 600.0
    row_gap_mm: float = 40.0
    name: str = ""


@dataclass(frozen=True, slots=True, order=True)
class Edge:
    """Undirected wire between two components, stored with a < b."""

    a: int
    b: int


@dataclass(frozen=True, slots=True)
class ObjectiveVector:
    """(heat, wire length) values of one layout; both objectives are minimized."""

    heat: float
    wire_mm: float


@dataclass(frozen=True, slots=True)
class ValidationIssue:
    code: str  # DuplicateIndex | IndexOutOfRange | DanglingConnection | SelfConnection | NonPositiveDimension
    index: int  # offending component index
    detail: str

    def __str__(self) -> str:
        return f"{self.code}(component {self.index}): {self.detail}"


class ComponentValidationError(CabinetError):
    """One or more components violate the model invariants."""

    def __init__(self, issues: list[ValidationIssue]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))

    def codes(self) -> set[str]:
        return {i.code for i in self.issues}


def validate_components(components: list[Component]) -> list[Component]:
    """Check the component invariants and return the list unchanged iff all hold.

    Indices must form exactly 1..n, dimensions must be positive and finite, and
    every connection target must name an existing component other than its
    owner. All violations are collected before raising.
    """
    if not components:
        raise ValueError("component list must be non-empty")
    n = len(components)
    issues: list[ValidationIssue] = []
    seen: set[int] = set()
    for comp in components:
        if comp.index in seen:
            issues.append(ValidationIssue("DuplicateIndex", comp.index, "index appears more than once"))
        seen.add(comp.index)
        if not 1 <= comp.index <= n:
            issues.append(ValidationIssue("IndexOutOfRange", comp.index, f"index outside 1..{n}"))
        for label, value in (("width_mm", comp.width_mm), ("height_mm", comp.height_mm), ("depth_mm", comp.depth_mm)):
            if not (math.isfinite(value) and value > 0.0):
                issues.append(ValidationIssue("NonPositiveDimension", comp.index, f"{label}={value!r} must be positive and finite"))
        for target in comp.connects_to:
            if target == comp.index:
                issues.append(ValidationIssue("SelfConnection", comp.index, "component connected to itself"))
            elif not 1 <= target <= n:
                issues.append(ValidationIssue("DanglingConnection", comp.index, f"connects_to target {target} outside 1..{n}"))
    if issues:
        raise ComponentValidationError(issues)
    return components


def normalize_edges(components: list[Component]) -> set[Edge]:
    """Collapse the directional connects_to lists into an undirected edge set.

    Duplicate and reciprocal listings yield a single edge: a wire is one
    physical object regardless of which side's catalog row mentions it.
    """
    edges: set[Edge] = set()
    for comp in components:
        for target in comp.connects_to:
            a, b = (comp.index, target) if comp.index < target else (target, comp.index)
            edges.add(Edge(a, b))
    return edges


def dominates(a: ObjectiveVector, b: ObjectiveVector) -> bool:
    """Minimization dominance: a is no worse in both objectives and better in one."""
    return (
        a.heat <= b.heat
        and a.wire_mm <= b.wire_mm
        and (a.heat < b.heat or a.wire_mm < b.wire_mm)
    )
