"""Pareto Simulated Annealing over cabinet layout permutations.

A set of generating solutions walks the permutation space simultaneously.
Every candidate neighbour is offered to a non-dominated archive; whether the
walker itself moves is decided by the weighted Boltzmann acceptance rule.
Each walker carries its own objective weights: random at its first improving
move, then adapted multiplicatively away from the nearest other walker in
objective space, so the set spreads across the trade-off front instead of
collapsing onto one blend. Cooling is geometric and the loop stops once the
temperature reaches 1.

Determinism contract: a run consumes a single seeded RNG stream in a fixed
order. Per run: one shuffle per initial solution; then per candidate, in
order, the move draws (move-type coin, then positions), the two weight draws
if this candidate triggers a walker's first weight initialization, and finally
one acceptance uniform. Weight adaptation itself draws nothing. Warm starts
prepend, per perturbed seed solution, one draw for the number of moves and the
draws of those moves.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .model import CabinetError, CabinetSpec, Component, ObjectiveVector
from .objectives import EvaluationContext
from .placement import Layout, Placement, pack, total_configurations

# Two archive vectors within this distance in both coordinates count as the
# same point; the archive keeps only the first.
OBJECTIVE_EQ_EPS = 1e-9


class InvalidConfig(CabinetError):
    """A PsaConfig field violates its invariant."""


class EmptyArchive(CabinetError):
    """No solution available to recommend."""


@dataclass(frozen=True, slots=True)
class PsaConfig:
    """Annealing schedule and search parameters.

    ``initial_temperature`` controls the iteration budget: the run performs
    sweeps over the generating set until the geometric cooling brings the
    temperature to 1 or below.
    """

    initial_temperature: float = 1000.0
    cooling_rate: float = 0.999
    steps_per_temperature: int = 1
    generating_set_size: int = 8
    weight_constant: float = 1.05
    weight_floor: float = 0.01
    swap_probability: float = 0.8
    rng_seed: int = 0


def validate_config(config: PsaConfig) -> PsaConfig:
    problems = []
    if not config.initial_temperature > 1.0:
        problems.append(f"initial_temperature must be > 1, got {config.initial_temperature}")
    if not 0.0 < config.cooling_rate < 1.0:
        problems.append(f"cooling_rate must be in (0, 1), got {config.cooling_rate}")
    if config.steps_per_temperature < 1:
        problems.append(f"steps_per_temperature must be >= 1, got {config.steps_per_temperature}")
    if config.generating_set_size < 1:
        problems.append(f"generating_set_size must be >= 1, got {config.generating_set_size}")
    if not config.weight_constant > 1.0:
        problems.append(f"weight_constant must be > 1, got {config.weight_constant}")
    if not 0.0 < config.weight_floor < 0.5:
        problems.append(f"weight_floor must be in (0, 0.5), got {config.weight_floor}")
    if not 0.0 <= config.swap_probability <= 1.0:
        problems.append(f"swap_probability must be in [0, 1], got {config.swap_probability}")
    if problems:
        raise InvalidConfig("; ".join(problems))
    return config


@dataclass(frozen=True, slots=True)
class WeightVector:
    """Per-walker objective weights; they sum to one and respect the floor."""

    heat: float = 0.5
    wire: float = 0.5


def _normalized(raw_heat: float, raw_wire: float, floor: float) -> WeightVector:
    # Normalize to sum 1, clamp into [floor, 1 - floor], normalize once more.
    # With two objectives the second normalization cannot leave the band.
    total = raw_heat + raw_wire
    heat = raw_heat / total
    wire = raw_wire / total
    ceiling = 1.0 - floor
    heat = floor if heat < floor else ceiling if heat > ceiling else heat
    wire = floor if wire < floor else ceiling if wire > ceiling else wire
    total = heat + wire
    return WeightVector(heat / total, wire / total)


def random_weights(rng: random.Random, floor: float) -> WeightVector:
    heat = rng.uniform(floor, 1.0 - floor)
    wire = rng.uniform(floor, 1.0 - floor)
    return _normalized(heat, wire, floor)


def update_weights(
    weights: WeightVector,
    f_s: ObjectiveVector,
    f_sn: ObjectiveVector,
    c: float,
    floor: float = 0.01,
) -> WeightVector:
    """Multiplicative weight adaptation: boost the objectives s holds an edge on.

    Per objective, the weight is multiplied by ``c`` when the reference vector
    f_sn is no better there, divided by ``c`` when it is; the result is then
    renormalized and clamped to the floor band. With the nearest other
    generating solution as the reference this steers each walker away from its
    closest companion, dispersing the set along the front.
    """
    heat = weights.heat * c if f_sn.heat >= f_s.heat else weights.heat / c
    wire = weights.wire * c if f_sn.wire_mm >= f_s.wire_mm else weights.wire / c
    return _normalized(heat, wire, floor)


def acceptance_probability(
    f_s: ObjectiveVector,
    f_sn: ObjectiveVector,
    weights: WeightVector,
    temperature: float,
) -> float:
    """Probability of replacing the current solution with the candidate.

    min{1, exp(sum_w lambda_w (f_w(s) - f_w(s_new)) / T)}: 1 whenever the
    candidate is at least as good in the weighted sense, an exponentially
    cooled coin otherwise. Underflow clamps to 0.
    """
    x = (
        weights.heat * (f_s.heat - f_sn.heat)
        + weights.wire * (f_s.wire_mm - f_sn.wire_mm)
    ) / temperature
    if x >= 0.0:
        return 1.0
    return math.exp(x)


@dataclass(frozen=True, slots=True)
class ArchiveEntry:
    layout: Layout
    objectives: ObjectiveVector
    seq: int  # insertion counter, breaks exact ties in select_recommended


class ParetoArchive:
    """Set of mutually non-dominated (layout, objectives) pairs.

    A candidate dominated by, or nearly equal (1e-9 in both coordinates) to,
    an existing entry is rejected; otherwise it evicts everything it dominates
    and joins. Insertion order is recorded for tie-breaking.
    """

    def __init__(self):
        self._entries: list[ArchiveEntry] = []
        self._heats: list[float] = []
        self._wires: list[float] = []
        self._next_seq = 0

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    @property
    def entries(self) -> tuple[ArchiveEntry, ...]:
        return tuple(self._entries)

    def insert(self, layout: Layout, objectives: ObjectiveVector) -> bool:
        h = objectives.heat
        w = objectives.wire_mm
        eps = OBJECTIVE_EQ_EPS
        heats = self._heats
        wires = self._wires
        for eh, ew in zip(heats, wires):
            if eh <= h and ew <= w and (eh < h or ew < w):
                return False
            dh = eh - h
            dw = ew - w
            if -eps <= dh <= eps and -eps <= dw <= eps:
                return False
        keep = [
            i
            for i, (eh, ew) in enumerate(zip(heats, wires))
            if not (h <= eh and w <= ew and (h < eh or w < ew))
        ]
        if len(keep) != len(self._entries):
            self._entries = [self._entries[i] for i in keep]
            self._heats = [heats[i] for i in keep]
            self._wires = [wires[i] for i in keep]
        self._entries.append(ArchiveEntry(layout, objectives, self._next_seq))
        self._heats.append(h)
        self._wires.append(w)
        self._next_seq += 1
        return True


def archive_insert(archive: ParetoArchive, candidate: tuple[Layout, ObjectiveVector]) -> bool:
    """Offer a candidate to the archive; returns whether it was inserted."""
    layout, objectives = candidate
    return archive.insert(layout, objectives)


def select_recommended(archive: ParetoArchive) -> tuple[Layout, ObjectiveVector]:
    """Lexicographic pick: minimal heat first (ties within 1e-9), then wire, then age."""
    entries = archive.entries
    if not entries:
        raise EmptyArchive("archive holds no solutions")
    best_heat = min(e.objectives.heat for e in entries)
    pool = [e for e in entries if e.objectives.heat <= best_heat + OBJECTIVE_EQ_EPS]
    chosen = min(pool, key=lambda e: (e.objectives.wire_mm, e.seq))
    return chosen.layout, chosen.objectives


@dataclass(slots=True)
class GeneratingSolution:
    """One walker of the generating set and its private objective weights."""

    layout: Layout
    objectives: ObjectiveVector
    weights: WeightVector
    weights_initialized: bool = False


@dataclass(frozen=True, slots=True)
class Recommended:
    layout: Layout
    objectives: ObjectiveVector
    placement: Placement


@dataclass(frozen=True, slots=True)
class OptimizationResult:
    archive: ParetoArchive
    recommended: Recommended
    iterations: int  # candidate evaluations performed
    wall_time_seconds: float
    fraction_of_space: float  # iterations / n!, capped at 1
    initial_mean: ObjectiveVector  # mean objectives of the initial generating set
    config: PsaConfig


def neighbor(layout: Layout, p_swap: float, rng: random.Random) -> Layout:
    """One random move: position swap with probability p_swap, else remove-reinsert."""
    return Layout(_neighbor_order(layout.order, p_swap, rng))


def _neighbor_order(order: tuple[int, ...], p_swap: float, rng: random.Random) -> tuple[int, ...]:
    n = len(order)
    if n < 2:
        return order
    items = list(order)
    if rng.random() < p_swap:
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        items[i], items[j] = items[j], items[i]
    else:
        i = rng.randrange(n)
        moved = items.pop(i)
        items.insert(rng.randrange(n), moved)
    return tuple(items)


def init_generating_set(ctx: EvaluationContext, set_size: int, rng: random.Random) -> list[GeneratingSolution]:
    """Uniformly random evaluated permutations; weights stay uninitialized."""
    solutions = []
    for _ in range(set_size):
        items = list(range(1, ctx.n + 1))
        rng.shuffle(items)  # Fisher-Yates on the seeded stream
        order = tuple(items)
        heat, wire = ctx.evaluate_order(order)
        solutions.append(
            GeneratingSolution(Layout(order), ObjectiveVector(heat, wire), WeightVector())
        )
    return solutions


def nearest_companion(
    solutions: list[GeneratingSolution], walker: GeneratingSolution
) -> ObjectiveVector | None:
    """Objectives of the generating solution closest to ``walker``, or None if alone.

    Distance is measured in objective space normalized by the set's current
    per-objective spans, so neither objective's scale drowns the other.
    """
    others = [s for s in solutions if s is not walker]
    if not others:
        return None
    heats = [s.objectives.heat for s in solutions]
    wires = [s.objectives.wire_mm for s in solutions]
    heat_span = (max(heats) - min(heats)) or 1.0
    wire_span = (max(wires) - min(wires)) or 1.0
    h = walker.objectives.heat
    w = walker.objectives.wire_mm
    best = None
    best_dist = math.inf
    for other in others:
        dist = ((other.objectives.heat - h) / heat_span) ** 2 + (
            (other.objectives.wire_mm - w) / wire_span
        ) ** 2
        if dist < best_dist:
            best_dist = dist
            best = other
    return best.objectives


def repair_layout(previous: Layout, n: int) -> Layout:
    """Fit a stale permutation to the current component set.

    Indices no longer present are dropped; newly appeared indices append in
    ascending order, landing at the cabinet bottom until the search moves them.
    """
    kept = [i for i in previous.order if 1 <= i <= n]
    seen = set(kept)
    kept.extend(i for i in range(1, n + 1) if i not in seen)
    return Layout(tuple(kept))


def run(config: PsaConfig, components: list[Component], cabinet: CabinetSpec) -> OptimizationResult:
    """Cold-start optimization from random generating solutions."""
    validate_config(config)
    ctx = EvaluationContext(components, cabinet)
    rng = random.Random(config.rng_seed)
    started = time.perf_counter()
    solutions = init_generating_set(ctx, config.generating_set_size, rng)
    return _anneal(config, ctx, rng, solutions, config.initial_temperature, started)


def run_warm(
    config: PsaConfig,
    components: list[Component],
    cabinet: CabinetSpec,
    previous: Layout,
) -> OptimizationResult:
    """Re-optimization seeded from a previous layout after a component edit.

    The generating set starts at the repaired previous layout plus small
    random perturbations of it (1 to 3 neighbour moves each), and the run
    anneals from a tenth of the configured initial temperature; that is what
    makes interactive reconfiguration near-instant.
    """
    validate_config(config)
    warm_t0 = config.initial_temperature / 10.0
    if not warm_t0 > 1.0:
        raise InvalidConfig(
            f"warm-start temperature {warm_t0} (initial_temperature / 10) must be > 1"
        )
    ctx = EvaluationContext(components, cabinet)
    rng = random.Random(config.rng_seed)
    started = time.perf_counter()
    base = repair_layout(previous, ctx.n)
    heat, wire = ctx.evaluate_order(base.order)
    solutions = [GeneratingSolution(base, ObjectiveVector(heat, wire), WeightVector())]
    for _ in range(config.generating_set_size - 1):
        order = base.order
        for _ in range(rng.randint(1, 3)):
            order = _neighbor_order(order, config.swap_probability, rng)
        heat, wire = ctx.evaluate_order(order)
        solutions.append(
            GeneratingSolution(Layout(order), ObjectiveVector(heat, wire), WeightVector())
        )
    return _anneal(config, ctx, rng, solutions, warm_t0, started)


def _anneal(
    config: PsaConfig,
    ctx: EvaluationContext,
    rng: random.Random,
    solutions: list[GeneratingSolution],
    t0: float,
    started: float,
) -> OptimizationResult:
    archive = ParetoArchive()
    for sol in solutions:
        archive.insert(sol.layout, sol.objectives)
    count = len(solutions)
    initial_mean = ObjectiveVector(
        sum(s.objectives.heat for s in solutions) / count,
        sum(s.objectives.wire_mm for s in solutions) / count,
    )

    p_swap = config.swap_probability
    c = config.weight_constant
    floor = config.weight_floor
    evaluate_order = ctx.evaluate_order
    rand = rng.random
    iterations = 0
    temperature = t0
    while temperature > 1.0:
        for _ in range(config.steps_per_temperature):
            for sol in solutions:
                cand_order = _neighbor_order(sol.layout.order, p_swap, rng)
                heat, wire = evaluate_order(cand_order)
                iterations += 1
                cand_layout = Layout(cand_order)
                cand_vec = ObjectiveVector(heat, wire)
                archive.insert(cand_layout, cand_vec)
                cur = sol.objectives
                if (
                    heat <= cur.heat
                    and wire <= cur.wire_mm
                    and (heat < cur.heat or wire < cur.wire_mm)
                ):
                    # Candidate dominates the walker: adapt its weights, pushing
                    # away from the nearest other walker so the set stays spread
                    # over the front.
                    if sol.weights_initialized:
                        reference = nearest_companion(solutions, sol)
                        if reference is not None:
                            sol.weights = update_weights(sol.weights, cur, reference, c, floor)
                    else:
                        sol.weights = random_weights(rng, floor)
                        sol.weights_initialized = True
                weights = sol.weights
                x = (
                    weights.heat * (cur.heat - heat)
                    + weights.wire * (cur.wire_mm - wire)
                ) / temperature
                p = 1.0 if x >= 0.0 else math.exp(x)
                if rand() < p:
                    sol.layout = cand_layout
                    sol.objectives = cand_vec
        temperature *= config.cooling_rate

    rec_layout, rec_vec = select_recommended(archive)
    placement = pack(rec_layout, list(ctx.components), ctx.cabinet)
    wall = time.perf_counter() - started
    return OptimizationResult(
        archive=archive,
        recommended=Recommended(rec_layout, rec_vec, placement),
        iterations=iterations,
        wall_time_seconds=wall,
        fraction_of_space=min(1.0, iterations / total_configurations(ctx.n)),
        initial_mean=initial_mean,
        config=config,
    )
