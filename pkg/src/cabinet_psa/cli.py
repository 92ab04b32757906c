"""Command-line interface: optimize, bench, reconfigure, oracle, dataset, serve.

Exit codes: 0 success, 1 input parse/validation failure, 2 invalid
configuration (including the oracle size guard). Fixed seeds make every
command byte-reproducible apart from wall-time fields.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .datasets import SYNTHETIC_SCENARIOS, builtin_document
from .engine import (
    InvalidConfig,
    OptimizationResult,
    PsaConfig,
    run,
    run_warm,
    select_recommended,
)
from .io_formats import (
    CabinetDocument,
    ParseError,
    parse_components_csv,
    parse_components_json,
    read_result_layout,
    render_svg,
    result_to_dict,
    write_result_json,
)
from .model import CabinetError, ComponentValidationError, ObjectiveVector, validate_components
from .oracle import TooLarge, enumerate_pareto
from .placement import Layout, pack

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONFIG = 2

REPLACE_FIELDS = ("width", "height", "depth", "isHot")


class CliInputError(CabinetError):
    """User-supplied input is unusable; maps to exit code 1."""


def load_document(path: str, fmt: str | None = None) -> CabinetDocument:
    """Read a cabinet description from a file or a bundled dataset name."""
    p = Path(path)
    if not p.exists():
        doc = builtin_document(path)
        if doc is not None:
            return doc
        raise CliInputError(f"input {path!r} is neither a file nor a bundled dataset")
    text = p.read_text(encoding="utf-8")
    if fmt is None:
        fmt = "json" if p.suffix.lower() == ".json" else "csv"
    if fmt == "json":
        return parse_components_json(text)
    return parse_components_csv(text)


def config_from_args(args: argparse.Namespace) -> PsaConfig:
    return PsaConfig(
        initial_temperature=args.t0,
        cooling_rate=args.alpha,
        steps_per_temperature=args.steps,
        generating_set_size=args.set_size,
        weight_constant=args.weight_c,
        weight_floor=args.weight_floor,
        swap_probability=args.swap_prob,
        rng_seed=args.seed,
    )


def _write_outputs(result: OptimizationResult, doc: CabinetDocument, out: str | None, svg: str | None) -> None:
    if out:
        Path(out).write_text(write_result_json(result), encoding="utf-8")
    if svg:
        svg_text = render_svg(
            result.recommended.placement, list(doc.components), result.recommended.objectives
        )
        Path(svg).write_text(svg_text, encoding="utf-8")


def cmd_optimize(args: argparse.Namespace) -> int:
    doc = load_document(args.input, args.format)
    config = config_from_args(args)
    result = run(config, list(doc.components), doc.cabinet)
    _write_outputs(result, doc, args.out, args.svg)
    rec = result.recommended.objectives
    print(
        f"heat={rec.heat:.4f} wire={rec.wire_mm:.1f}mm iterations={result.iterations} "
        f"fraction={result.fraction_of_space:.3e} seconds={result.wall_time_seconds:.2f}"
    )
    return EXIT_OK


# -- bench ---------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class BenchCell:
    """One (initial temperature, seed) run of the benchmark grid."""

    t0: float
    seed: int
    initial: ObjectiveVector
    final: ObjectiveVector
    heat_improvement: float
    wire_improvement: float
    iterations: int
    wall_time_seconds: float


def improvement_ratio(initial: float, final: float) -> float:
    # Improvement(w) = Initial(w) / Final(w); a zero optimum counts as
    # perfectly solved rather than a division blowup.
    if final == 0.0:
        return 1.0 if initial == 0.0 else float("inf")
    return initial / final


def bench_cell(doc: CabinetDocument, base: PsaConfig, t0: float, seed: int) -> BenchCell:
    config = replace(base, initial_temperature=t0, rng_seed=seed)
    result = run(config, list(doc.components), doc.cabinet)
    initial = result.initial_mean
    final = result.recommended.objectives
    return BenchCell(
        t0=t0,
        seed=seed,
        initial=initial,
        final=final,
        heat_improvement=improvement_ratio(initial.heat, final.heat),
        wire_improvement=improvement_ratio(initial.wire_mm, final.wire_mm),
        iterations=result.iterations,
        wall_time_seconds=result.wall_time_seconds,
    )


def bench_worker_count() -> int:
    raw = os.environ.get("CABINET_PSA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_bench(doc: CabinetDocument, base: PsaConfig, t0_list: list[float], runs: int, seed_base: int) -> dict:
    grid = [(t0, seed_base + k) for t0 in t0_list for k in range(runs)]
    workers = bench_worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(lambda cell: bench_cell(doc, base, *cell), grid))
    else:
        cells = [bench_cell(doc, base, t0, seed) for t0, seed in grid]

    summary = {}
    for t0 in t0_list:
        group = [c for c in cells if c.t0 == t0]
        heat = [c.heat_improvement for c in group]
        wire = [c.wire_improvement for c in group]
        summary[f"{t0:g}"] = {
            "heatImprovement": {"mean": sum(heat) / len(heat), "min": min(heat), "max": max(heat)},
            "wireImprovement": {"mean": sum(wire) / len(wire), "min": min(wire), "max": max(wire)},
            "meanIterations": sum(c.iterations for c in group) / len(group),
            "meanWallTimeSeconds": sum(c.wall_time_seconds for c in group) / len(group),
        }
    return {
        "runsPerTemperature": runs,
        "seedBase": seed_base,
        "initialDefinition": "mean objectives of the run's initial generating set",
        "cells": [
            {
                "t0": c.t0,
                "seed": c.seed,
                "initialHeat": c.initial.heat,
                "initialWireMm": c.initial.wire_mm,
                "finalHeat": c.final.heat,
                "finalWireMm": c.final.wire_mm,
                "heatImprovement": c.heat_improvement,
                "wireImprovement": c.wire_improvement,
                "iterations": c.iterations,
                "wallTimeSeconds": c.wall_time_seconds,
            }
            for c in cells
        ],
        "summary": summary,
    }


def cmd_bench(args: argparse.Namespace) -> int:
    doc = load_document(args.input, args.format)
    try:
        t0_list = [float(part) for part in args.t0_list.split(",") if part.strip()]
    except ValueError:
        raise CliInputError(f"--t0-list must be comma-separated numbers, got {args.t0_list!r}") from None
    if not t0_list:
        raise CliInputError("--t0-list must name at least one temperature")
    base = PsaConfig(
        cooling_rate=args.alpha,
        steps_per_temperature=args.steps,
        generating_set_size=args.set_size,
        weight_constant=args.weight_c,
        weight_floor=args.weight_floor,
        swap_probability=args.swap_prob,
    )
    report = run_bench(doc, base, t0_list, args.runs, args.seed_base)
    if args.out:
        Path(args.out).write_text(json.dumps(report, indent=2) + "\n", encoding="utf-8")
    header = f"{'T0':>8}  {'heat x':>16}  {'wire x':>16}  {'iters':>9}  {'sec':>6}"
    print(header)
    for key, row in report["summary"].items():
        h = row["heatImprovement"]
        w = row["wireImprovement"]
        print(
            f"{key:>8}  {h['mean']:5.2f} [{h['min']:4.2f},{h['max']:5.2f}]  "
            f"{w['mean']:5.2f} [{w['min']:4.2f},{w['max']:5.2f}]  "
            f"{row['meanIterations']:9.0f}  {row['meanWallTimeSeconds']:6.2f}"
        )
    return EXIT_OK


# -- reconfigure -----------------------------------------------------------------


def parse_replacements(specs: list[str]) -> list[tuple[int, str, str]]:
    """Parse `<index>:<field>=<value>` items, comma-separated or repeated."""
    edits = []
    for spec in specs:
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            head, sep, value = item.partition("=")
            if not sep:
                raise CliInputError(f"replacement {item!r} must look like index:field=value")
            index_part, sep, field = head.partition(":")
            if not sep:
                raise CliInputError(f"replacement {item!r} must look like index:field=value")
            try:
                index = int(index_part)
            except ValueError:
                raise CliInputError(f"component index {index_part!r} is not an integer") from None
            edits.append((index, field.strip(), value.strip()))
    if not edits:
        raise CliInputError("--replace lists no edits")
    return edits


def apply_replacements(doc: CabinetDocument, edits: list[tuple[int, str, str]]) -> CabinetDocument:
    by_index = {c.index: c for c in doc.components}
    for index, field, value in edits:
        if index not in by_index:
            raise CliInputError(f"UnknownComponent: no component with index {index}")
        if field not in REPLACE_FIELDS:
            raise CliInputError(f"UnknownField: {field!r} is not one of {', '.join(REPLACE_FIELDS)}")
        comp = by_index[index]
        if field == "isHot":
            if value not in ("0", "1"):
                raise CliInputError(f"isHot must be 0 or 1, got {value!r}")
            by_index[index] = replace(comp, is_hot=value == "1")
        else:
            try:
                number = float(value)
            except ValueError:
                raise CliInputError(f"{field} must be a number, got {value!r}") from None
            attr = {"width": "width_mm", "height": "height_mm", "depth": "depth_mm"}[field]
            by_index[index] = replace(comp, **{attr: number})
    components = [by_index[c.index] for c in doc.components]
    try:
        validate_components(components)
    except ComponentValidationError as err:
        raise CliInputError(str(err)) from err
    return CabinetDocument(doc.cabinet, tuple(components))


def cmd_reconfigure(args: argparse.Namespace) -> int:
    doc = load_document(args.input, args.format)
    previous_path = Path(args.previous)
    if not previous_path.exists():
        raise CliInputError(f"previous result {args.previous!r} does not exist")
    previous = read_result_layout(previous_path.read_text(encoding="utf-8"))
    edited = apply_replacements(doc, parse_replacements(args.replace))
    config = config_from_args(args)
    result = run_warm(config, list(edited.components), edited.cabinet, previous)
    _write_outputs(result, edited, args.out, args.svg)
    rec = result.recommended.objectives
    print(
        f"reoptimized in {result.wall_time_seconds:.3f}s: heat={rec.heat:.4f} "
        f"wire={rec.wire_mm:.1f}mm iterations={result.iterations}"
    )
    return EXIT_OK


# -- oracle ----------------------------------------------------------------------


def oracle_result_to_dict(front, wall_time_seconds: float) -> dict:
    """Shape the exact front like an optimization result so readers can share code."""
    from .engine import ParetoArchive

    archive = ParetoArchive()
    for layout, vec in front.entries:
        archive.insert(layout, vec)
    rec_layout, rec_vec = select_recommended(archive)
    return {
        "formatVersion": 1,
        "oracle": True,
        "recommended": {
            "order": list(rec_layout.order),
            "objectives": {"heat": rec_vec.heat, "wireMm": rec_vec.wire_mm},
        },
        "archive": [
            {"heat": vec.heat, "wireMm": vec.wire_mm, "order": list(layout.order)}
            for layout, vec in front.entries
        ],
        "iterations": front.enumerated_count,
        "fractionOfSpace": 1.0,
        "wallTimeSeconds": wall_time_seconds,
    }


def cmd_oracle(args: argparse.Namespace) -> int:
    doc = load_document(args.input, args.format)
    started = time.perf_counter()
    front = enumerate_pareto(list(doc.components), doc.cabinet, max_n=args.max_n)
    wall = time.perf_counter() - started
    payload = oracle_result_to_dict(front, wall)
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    print(
        f"front={len(front.entries)} evaluated={front.enumerated_count} seconds={wall:.2f}"
    )
    return EXIT_OK


# -- dataset / serve ---------------------------------------------------------------


def cmd_dataset(args: argparse.Namespace) -> int:
    from .io_formats import write_components_csv, write_components_json

    doc = builtin_document(args.name)
    if doc is None:
        known = ", ".join(["sample-15", *SYNTHETIC_SCENARIOS])
        raise CliInputError(f"unknown dataset {args.name!r}; bundled: {known}")
    text = write_components_json(doc) if args.out.endswith(".json") else write_components_csv(doc)
    Path(args.out).write_text(text, encoding="utf-8")
    print(f"wrote {args.name} ({len(doc.components)} components) to {args.out}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(worker_count=args.workers, snapshot_path=args.snapshot)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def _add_config_flags(parser: argparse.ArgumentParser, default_t0: float = 1000.0) -> None:
    parser.add_argument("--t0", type=float, default=default_t0, help="initial annealing temperature")
    parser.add_argument("--alpha", type=float, default=0.999, help="geometric cooling rate")
    parser.add_argument("--steps", type=int, default=1, help="sweeps per temperature step")
    parser.add_argument("--set-size", type=int, default=8, help="generating set size")
    parser.add_argument("--weight-c", type=float, default=1.05, help="weight adaptation constant")
    parser.add_argument("--weight-floor", type=float, default=0.01, help="minimum objective weight")
    parser.add_argument("--swap-prob", type=float, default=0.8, help="probability of a swap move")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed")


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="cabinet file or bundled dataset name")
    parser.add_argument("--format", choices=("csv", "json"), default=None, help="input format (default: by extension)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cabinet-psa", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("optimize", help="run a cold-start optimization")
    _add_input_flags(p)
    _add_config_flags(p)
    p.add_argument("--out", default=None, help="result JSON path")
    p.add_argument("--svg", default=None, help="layout SVG path")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("bench", help="improvement/runtime grid over initial temperatures")
    _add_input_flags(p)
    p.add_argument("--t0-list", default="100,1000,10000", help="comma-separated initial temperatures")
    p.add_argument("--runs", type=int, default=10, help="runs per temperature")
    p.add_argument("--seed-base", type=int, default=1, help="first seed; runs use seed-base..seed-base+runs-1")
    p.add_argument("--alpha", type=float, default=0.999)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--set-size", type=int, default=8)
    p.add_argument("--weight-c", type=float, default=1.05)
    p.add_argument("--weight-floor", type=float, default=0.01)
    p.add_argument("--swap-prob", type=float, default=0.8)
    p.add_argument("--out", default=None, help="report JSON path")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("reconfigure", help="warm re-optimization after component edits")
    _add_input_flags(p)
    p.add_argument("--previous", required=True, help="result JSON of the layout being adapted")
    p.add_argument(
        "--replace",
        action="append",
        required=True,
        help="edits as index:field=value[,index:field=value...]; fields: width, height, depth, isHot",
    )
    _add_config_flags(p)
    p.add_argument("--out", default=None, help="result JSON path")
    p.add_argument("--svg", default=None, help="layout SVG path")
    p.set_defaults(func=cmd_reconfigure)

    p = sub.add_parser("oracle", help="exact Pareto front by full enumeration (small n)")
    _add_input_flags(p)
    p.add_argument("--max-n", type=int, default=9, help="refuse instances larger than this")
    p.add_argument("--out", default=None, help="front JSON path")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("dataset", help="write a bundled dataset to a file")
    p.add_argument("name", help="sample-15, synth-a, synth-b or synth-c")
    p.add_argument("--out", required=True, help="output path (.json for JSON, otherwise CSV)")
    p.set_defaults(func=cmd_dataset)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8099)
    p.add_argument("--workers", type=int, default=2, help="optimization worker threads")
    p.add_argument("--snapshot", default=None, help="write stored cabinets here on shutdown")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliInputError, ParseError, ComponentValidationError, FileNotFoundError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidConfig, TooLarge) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
