"""Cabinet file formats: component CSV/JSON, result JSON, and SVG rendering.

The CSV schema mirrors the component catalog table one row per component
(`#,ID,Width,Height,Depth,ConnectsTo,IsHot`, ConnectsTo semicolon-separated)
with optional leading directive lines for the cabinet itself. JSON is the
lossless interchange format used by the HTTP service and the UI. Result JSON
and SVG are emitted with stable ordering and fixed number formatting so equal
runs produce byte-equal files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any
from xml.sax.saxutils import escape

from .engine import OptimizationResult, PsaConfig
from .model import (
    CabinetError,
    CabinetSpec,
    Component,
    ComponentValidationError,
    ObjectiveVector,
    normalize_edges,
    validate_components,
)
from .placement import Layout, Placement

CSV_HEADER = "#,ID,Width,Height,Depth,ConnectsTo,IsHot"
FORMAT_VERSION = 1


class ParseError(CabinetError):
    """Input text violates the format; carries the offending location."""

    def __init__(self, reason: str, line: int | None = None, column: int | None = None, path: str | None = None):
        self.reason = reason
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
        elif path is not None:
            where = path
        super().__init__(f"{where}: {reason}" if where else reason)


@dataclass(frozen=True, slots=True)
class CabinetDocument:
    """A cabinet spec plus its validated component list."""

    cabinet: CabinetSpec
    components: tuple[Component, ...]
    format_version: int = FORMAT_VERSION


def _build_document(cabinet: CabinetSpec, components: list[Component]) -> CabinetDocument:
    validate_components(components)
    return CabinetDocument(cabinet, tuple(components))


# -- CSV ---------------------------------------------------------------------


def parse_components_csv(text: str) -> CabinetDocument:
    """Parse the component table format.

    Directive lines (`!width=`, `!rowgap=`, `!name=`) may precede the header
    and set the cabinet spec; width and row gap default to 600 and 40 mm.
    """
    width = 600.0
    row_gap = 40.0
    name = ""
    lines = text.splitlines()
    pos = 0
    while pos < len(lines) and lines[pos].strip().startswith("!"):
        line_no = pos + 1
        directive = lines[pos].strip()[1:]
        key, sep, value = directive.partition("=")
        if not sep:
            raise ParseError(f"malformed directive {lines[pos].strip()!r}", line=line_no)
        key = key.strip()
        value = value.strip()
        if key == "width":
            width = _parse_float(value, line_no, None, "width directive")
        elif key == "rowgap":
            row_gap = _parse_float(value, line_no, None, "rowgap directive")
        elif key == "name":
            name = value
        else:
            raise ParseError(f"unknown directive {key!r}", line=line_no)
        pos += 1

    while pos < len(lines) and not lines[pos].strip():
        pos += 1
    if pos >= len(lines) or lines[pos].strip() != CSV_HEADER:
        raise ParseError(f"expected header {CSV_HEADER!r}", line=pos + 1)
    pos += 1

    components: list[Component] = []
    row_lines: dict[int, int] = {}
    for offset in range(pos, len(lines)):
        line_no = offset + 1
        raw = lines[offset].strip()
        if not raw:
            continue
        fields = [f.strip() for f in raw.split(",")]
        if len(fields) != 7:
            raise ParseError(f"expected 7 fields, got {len(fields)}", line=line_no)
        index = _parse_int(fields[0], line_no, 1, "component index")
        width_mm = _parse_float(fields[2], line_no, 3, "width")
        height_mm = _parse_float(fields[3], line_no, 4, "height")
        depth_mm = _parse_float(fields[4], line_no, 5, "depth")
        connects = tuple(
            _parse_int(part, line_no, 6, "connection index")
            for part in fields[5].split(";")
            if part != ""
        )
        if fields[6] not in ("0", "1"):
            raise ParseError(f"IsHot must be 0 or 1, got {fields[6]!r}", line=line_no, column=7)
        components.append(
            Component(index, fields[1], width_mm, height_mm, depth_mm, connects, fields[6] == "1")
        )
        row_lines[index] = line_no

    try:
        return _build_document(CabinetSpec(width, row_gap, name), components)
    except ComponentValidationError as err:
        first = err.issues[0]
        raise ParseError(str(err), line=row_lines.get(first.index)) from err
    except ValueError as err:
        raise ParseError(str(err)) from err


def write_components_csv(doc: CabinetDocument) -> str:
    lines = [
        f"!width={doc.cabinet.usable_width_mm:g}",
        f"!rowgap={doc.cabinet.row_gap_mm:g}",
    ]
    if doc.cabinet.name:
        lines.append(f"!name={doc.cabinet.name}")
    lines.append(CSV_HEADER)
    for comp in doc.components:
        connects = ";".join(str(i) for i in comp.connects_to)
        lines.append(
            f"{comp.index},{comp.id},{comp.width_mm:g},{comp.height_mm:g},"
            f"{comp.depth_mm:g},{connects},{int(comp.is_hot)}"
        )
    return "\n".join(lines) + "\n"


def _parse_float(text: str, line: int, column: int | None, label: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ParseError(f"{label} must be a number, got {text!r}", line=line, column=column) from None
    return value


def _parse_int(text: str, line: int, column: int | None, label: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{label} must be an integer, got {text!r}", line=line, column=column) from None


# -- JSON --------------------------------------------------------------------


def parse_components_json(text: str) -> CabinetDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", line=err.lineno, column=err.colno) from err
    return document_from_dict(data)


def document_from_dict(data: Any) -> CabinetDocument:
    """Build a validated document from parsed JSON; errors carry the JSON path."""
    if not isinstance(data, dict):
        raise ParseError("document must be an object", path="$")
    version = _require(data, "formatVersion", int, "$")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported formatVersion {version}", path="$.formatVersion")
    cab = _require(data, "cabinet", dict, "$")
    cabinet = CabinetSpec(
        usable_width_mm=_require(cab, "usableWidthMm", (int, float), "$.cabinet"),
        row_gap_mm=_require(cab, "rowGapMm", (int, float), "$.cabinet"),
        name=str(cab.get("name", "")),
    )
    items = _require(data, "components", list, "$")
    components = [component_from_dict(item, f"components[{k}]") for k, item in enumerate(items)]
    try:
        return _build_document(cabinet, components)
    except ComponentValidationError as err:
        raise ParseError(str(err), path="components") from err
    except ValueError as err:
        raise ParseError(str(err), path="components") from err


def component_from_dict(item: Any, path: str) -> Component:
    if not isinstance(item, dict):
        raise ParseError("component must be an object", path=path)
    connects = _require(item, "connectsTo", list, path)
    targets = []
    for k, target in enumerate(connects):
        if not isinstance(target, int) or isinstance(target, bool):
            raise ParseError("connection index must be an integer", path=f"{path}.connectsTo[{k}]")
        targets.append(target)
    return Component(
        index=_require(item, "index", int, path),
        id=str(_require(item, "id", (str, int), path)),
        width_mm=float(_require(item, "widthMm", (int, float), path)),
        height_mm=float(_require(item, "heightMm", (int, float), path)),
        depth_mm=float(_require(item, "depthMm", (int, float), path)),
        connects_to=tuple(targets),
        is_hot=_parse_hot_flag(item, path),
    )


def _parse_hot_flag(item: dict, path: str) -> bool:
    value = _require(item, "isHot", (bool, int), path)
    if isinstance(value, bool):
        return value
    if value in (0, 1):
        return bool(value)
    raise ParseError(f"isHot must be a boolean or 0/1, got {value!r}", path=f"{path}.isHot")


def _require(data: dict, key: str, types, path: str):
    if key not in data:
        raise ParseError(f"missing required key {key!r}", path=f"{path}.{key}")
    value = data[key]
    if types is int and isinstance(value, bool):
        raise ParseError(f"{key!r} must be an integer", path=f"{path}.{key}")
    if not isinstance(value, types):
        raise ParseError(f"{key!r} has wrong type {type(value).__name__}", path=f"{path}.{key}")
    return value


def document_to_dict(doc: CabinetDocument) -> dict:
    return {
        "formatVersion": doc.format_version,
        "cabinet": {
            "usableWidthMm": doc.cabinet.usable_width_mm,
            "rowGapMm": doc.cabinet.row_gap_mm,
            "name": doc.cabinet.name,
        },
        "components": [
            {
                "index": c.index,
                "id": c.id,
                "widthMm": c.width_mm,
                "heightMm": c.height_mm,
                "depthMm": c.depth_mm,
                "connectsTo": list(c.connects_to),
                "isHot": c.is_hot,
            }
            for c in doc.components
        ],
    }


def write_components_json(doc: CabinetDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2) + "\n"


# -- Result JSON ---------------------------------------------------------------


def config_to_dict(config: PsaConfig) -> dict:
    return {
        "initialTemperature": config.initial_temperature,
        "coolingRate": config.cooling_rate,
        "stepsPerTemperature": config.steps_per_temperature,
        "generatingSetSize": config.generating_set_size,
        "weightConstant": config.weight_constant,
        "weightFloor": config.weight_floor,
        "swapProbability": config.swap_probability,
        "rngSeed": config.rng_seed,
    }


def placement_to_dict(placement: Placement) -> dict:
    return {
        "usableWidthMm": placement.usable_width_mm,
        "totalHeightMm": placement.total_height_mm,
        "rows": [{"yMm": r.y_mm, "heightMm": r.height_mm} for r in placement.rows],
        "components": [
            {
                "index": p.index,
                "xMm": p.x_mm,
                "yMm": p.y_mm,
                "row": p.row,
                "widthMm": p.width_mm,
                "heightMm": p.height_mm,
            }
            for p in placement.components
        ],
    }


def result_to_dict(result: OptimizationResult) -> dict:
    archive = sorted(
        result.archive.entries,
        key=lambda e: (e.objectives.heat, e.objectives.wire_mm, e.seq),
    )
    return {
        "formatVersion": FORMAT_VERSION,
        "config": config_to_dict(result.config),
        "recommended": {
            "order": list(result.recommended.layout.order),
            "objectives": {
                "heat": result.recommended.objectives.heat,
                "wireMm": result.recommended.objectives.wire_mm,
            },
            "placement": placement_to_dict(result.recommended.placement),
        },
        "archive": [
            {"heat": e.objectives.heat, "wireMm": e.objectives.wire_mm, "order": list(e.layout.order)}
            for e in archive
        ],
        "initialMean": {"heat": result.initial_mean.heat, "wireMm": result.initial_mean.wire_mm},
        "iterations": result.iterations,
        "fractionOfSpace": result.fraction_of_space,
        "wallTimeSeconds": result.wall_time_seconds,
    }


def write_result_json(result: OptimizationResult) -> str:
    return json.dumps(result_to_dict(result), indent=2) + "\n"


def read_result_layout(text: str) -> Layout:
    """Recover the recommended layout order from a result JSON file."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", line=err.lineno, column=err.colno) from err
    try:
        order = data["recommended"]["order"]
    except (KeyError, TypeError):
        raise ParseError("missing recommended.order", path="$.recommended.order") from None
    if not isinstance(order, list) or not all(isinstance(i, int) for i in order):
        raise ParseError("recommended.order must be a list of integers", path="$.recommended.order")
    return Layout(tuple(order))


# -- SVG -----------------------------------------------------------------------

_MARGIN = 20.0
_HEADER_H = 28.0
_HOT_FILL = "#e06c5b"
_COLD_FILL = "#8fb4d9"


def render_svg(placement: Placement, components: list[Component], objectives: ObjectiveVector) -> str:
    """Draw the placed cabinet: one labeled rect per component, one wire polyline per edge.

    Wires are routed as horizontal-then-vertical elbows between component
    centres, so each polyline's drawn length equals the Manhattan distance it
    contributes; that value is repeated in its data-length-mm attribute.
    """
    by_index = {c.index: c for c in components}
    width = placement.usable_width_mm + 2 * _MARGIN
    height = placement.total_height_mm + 2 * _MARGIN + _HEADER_H
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2f}" height="{height:.2f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}" font-family="sans-serif">',
        f'<text x="{_MARGIN:.2f}" y="{_MARGIN - 2.0:.2f}" font-size="14">'
        f"heat={objectives.heat:.3f} wire={objectives.wire_mm:.1f} mm</text>",
        f'<path d="M {_MARGIN:.2f} {_MARGIN + _HEADER_H:.2f} h {placement.usable_width_mm:.2f} '
        f'v {placement.total_height_mm:.2f} h {-placement.usable_width_mm:.2f} Z" '
        'fill="none" stroke="#444" stroke-width="1.5"/>',
    ]
    ox = _MARGIN
    oy = _MARGIN + _HEADER_H
    for placed in placement.components:
        comp = by_index[placed.index]
        fill = _HOT_FILL if comp.is_hot else _COLD_FILL
        parts.append(
            f'<rect x="{ox + placed.x_mm:.2f}" y="{oy + placed.y_mm:.2f}" '
            f'width="{placed.width_mm:.2f}" height="{placed.height_mm:.2f}" '
            f'fill="{fill}" stroke="#333" stroke-width="1" data-index="{placed.index}"/>'
        )
    centers = {
        p.index: (ox + p.x_mm + 0.5 * p.width_mm, oy + p.y_mm + 0.5 * p.height_mm)
        for p in placement.components
    }
    for edge in sorted(normalize_edges(components)):
        ax, ay = centers[edge.a]
        bx, by = centers[edge.b]
        length = abs(ax - bx) + abs(ay - by)
        parts.append(
            f'<polyline points="{ax:.2f},{ay:.2f} {bx:.2f},{ay:.2f} {bx:.2f},{by:.2f}" '
            f'fill="none" stroke="#222" stroke-width="0.8" opacity="0.7" '
            f'data-length-mm="{length:.2f}"/>'
        )
    for placed in placement.components:
        comp = by_index[placed.index]
        label = escape(f"#{placed.index} {comp.id}")
        parts.append(
            f'<text x="{ox + placed.x_mm + 4.0:.2f}" y="{oy + placed.y_mm + 13.0:.2f}" '
            f'font-size="11">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
