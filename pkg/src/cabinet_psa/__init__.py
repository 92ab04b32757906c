"""Multi-objective control cabinet layout optimization with Pareto Simulated Annealing.

Searches feed orders of cabinet components for DIN-rail layouts that jointly
minimize total interconnect wire length and a heat-placement penalty, keeps
every non-dominated trade-off in a Pareto archive, and supports warm-started
re-optimization when a component is replaced.
"""

from .engine import (
    ArchiveEntry,
    EmptyArchive,
    GeneratingSolution,
    InvalidConfig,
    OptimizationResult,
    ParetoArchive,
    PsaConfig,
    Recommended,
    WeightVector,
    acceptance_probability,
    archive_insert,
    init_generating_set,
    neighbor,
    repair_layout,
    run,
    run_warm,
    select_recommended,
    update_weights,
)
from .io_formats import (
    CabinetDocument,
    ParseError,
    parse_components_csv,
    parse_components_json,
    render_svg,
    write_components_csv,
    write_components_json,
    write_result_json,
)
from .model import (
    CabinetError,
    CabinetSpec,
    Component,
    ComponentValidationError,
    Edge,
    ObjectiveVector,
    dominates,
    normalize_edges,
    validate_components,
)
from .objectives import EvaluationContext, evaluate, heat_level, wire_length
from .oracle import OracleFront, TooLarge, enumerate_pareto
from .placement import (
    ComponentTooWide,
    Layout,
    Placement,
    UnknownIndex,
    component_center,
    pack,
    total_configurations,
)

__all__ = [
    "ArchiveEntry",
    "CabinetDocument",
    "CabinetError",
    "CabinetSpec",
    "Component",
    "ComponentTooWide",
    "ComponentValidationError",
    "Edge",
    "EmptyArchive",
    "EvaluationContext",
    "GeneratingSolution",
    "InvalidConfig",
    "Layout",
    "ObjectiveVector",
    "OptimizationResult",
    "OracleFront",
    "ParetoArchive",
    "ParseError",
    "Placement",
    "PsaConfig",
    "Recommended",
    "TooLarge",
    "UnknownIndex",
    "WeightVector",
    "acceptance_probability",
    "archive_insert",
    "component_center",
    "dominates",
    "enumerate_pareto",
    "evaluate",
    "heat_level",
    "init_generating_set",
    "neighbor",
    "normalize_edges",
    "pack",
    "parse_components_csv",
    "parse_components_json",
    "render_svg",
    "repair_layout",
    "run",
    "run_warm",
    "select_recommended",
    "total_configurations",
    "update_weights",
    "validate_components",
    "wire_length",
    "write_components_csv",
    "write_components_json",
    "write_result_json",
]
