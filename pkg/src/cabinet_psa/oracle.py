"""Exact brute-force Pareto front for small cabinets; the engine's correctness reference.

Every one of the n! feed orders is evaluated with the same objective
arithmetic the search uses, but the non-dominated filtering here is a
separate, simple staircase sweep so a defect in the archive logic cannot hide
behind itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import CabinetError, CabinetSpec, Component, ObjectiveVector
from .objectives import EvaluationContext
from .placement import Layout, total_configurations

from itertools import permutations


class TooLarge(CabinetError):
    """Instance exceeds the enumeration guard."""

    def __init__(self, n: int, max_n: int):
        self.n = n
        self.max_n = max_n
        super().__init__(f"{n} components means {n}! layouts; enumeration is capped at n <= {max_n}")


@dataclass(frozen=True, slots=True)
class OracleFront:
    """The true Pareto front: lexicographically sorted, mutually non-dominated."""

    entries: tuple[tuple[Layout, ObjectiveVector], ...]
    enumerated_count: int

    def vectors(self) -> tuple[ObjectiveVector, ...]:
        return tuple(vec for _, vec in self.entries)


def enumerate_pareto(components: list[Component], cabinet: CabinetSpec, max_n: int = 9) -> OracleFront:
    """Evaluate all n! layouts and keep the exact non-dominated objective set.

    Distinct permutations often share an objective vector; the first layout
    encountered for each surviving vector is kept as its witness.
    """
    ctx = EvaluationContext(components, cabinet)
    if ctx.n > max_n:
        raise TooLarge(ctx.n, max_n)

    witnesses: dict[tuple[float, float], tuple[int, ...]] = {}
    evaluate_order = ctx.evaluate_order
    for perm in permutations(range(1, ctx.n + 1)):
        vec = evaluate_order(perm)
        if vec not in witnesses:
            witnesses[vec] = perm

    # Staircase sweep: sorted by (heat, wire), a vector survives iff its wire
    # is strictly below everything already kept.
    front: list[tuple[tuple[float, float], tuple[int, ...]]] = []
    best_wire = float("inf")
    for vec in sorted(witnesses):
        if vec[1] < best_wire:
            front.append((vec, witnesses[vec]))
            best_wire = vec[1]

    entries = tuple(
        (Layout(order), ObjectiveVector(heat, wire)) for (heat, wire), order in front
    )
    return OracleFront(entries, total_configurations(ctx.n))
