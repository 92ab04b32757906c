"""HTTP service: cabinet storage, optimization jobs, and component replacement.

Everything lives in process memory for the lifetime of the server; this is a
desk tool, not a fleet service. Cabinets are versioned so a warm start can
reference the layout a previous job produced even after further edits. Jobs
run on a small worker pool and move strictly queued -> running -> done/failed;
a done job's payload never changes afterwards.
"""

from __future__ import annotations

import copy
import json
import queue
import threading
from contextlib import asynccontextmanager
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .engine import InvalidConfig, PsaConfig, run, run_warm, validate_config
from .io_formats import (
    CabinetDocument,
    ParseError,
    config_to_dict,
    document_from_dict,
    document_to_dict,
    render_svg,
    result_to_dict,
)
from .model import ComponentValidationError, validate_components
from .placement import Layout

_CONFIG_KEYS = {
    "initialTemperature": "initial_temperature",
    "coolingRate": "cooling_rate",
    "stepsPerTemperature": "steps_per_temperature",
    "generatingSetSize": "generating_set_size",
    "weightConstant": "weight_constant",
    "weightFloor": "weight_floor",
    "swapProbability": "swap_probability",
    "rngSeed": "rng_seed",
}

_EDITABLE_FIELDS = {"widthMm", "heightMm", "depthMm", "isHot", "connectsTo"}


class ApiError(Exception):
    def __init__(self, status: int, detail: str):
        self.status = status
        self.detail = detail
        super().__init__(detail)


def config_from_overrides(payload: dict[str, Any]) -> PsaConfig:
    """Build a PsaConfig from request overrides; unknown keys are rejected."""
    kwargs = {}
    for key, value in payload.items():
        if key == "warmFrom":
            continue
        if key not in _CONFIG_KEYS:
            raise ApiError(400, f"unknown config key {key!r}")
        attr = _CONFIG_KEYS[key]
        if attr in ("steps_per_temperature", "generating_set_size", "rng_seed"):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ApiError(400, f"{key} must be an integer")
            kwargs[attr] = value
        else:
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ApiError(400, f"{key} must be a number")
            kwargs[attr] = float(value)
    config = PsaConfig(**kwargs)
    try:
        validate_config(config)
    except InvalidConfig as err:
        raise ApiError(400, str(err)) from err
    return config


@dataclass
class Job:
    job_id: str
    cabinet_id: str
    state: str  # queued | running | done | failed
    config: PsaConfig
    document: CabinetDocument  # cabinet version snapshot taken at enqueue time
    warm_previous: Layout | None = None
    result: dict | None = None
    error: str | None = None

    def snapshot(self) -> dict:
        body = {
            "jobId": self.job_id,
            "cabinetId": self.cabinet_id,
            "state": self.state,
            "config": config_to_dict(self.config),
            "error": self.error,
            "result": copy.deepcopy(self.result),
        }
        return body


@dataclass
class _State:
    worker_count: int
    snapshot_path: str | None
    cabinets: dict[str, list[CabinetDocument]] = field(default_factory=dict)
    jobs: dict[str, Job] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)
    tasks: "queue.Queue[str | None]" = field(default_factory=queue.Queue)
    workers: list[threading.Thread] = field(default_factory=list)
    next_cabinet: int = 0
    next_job: int = 0

    def new_cabinet_id(self) -> str:
        self.next_cabinet += 1
        return f"cab-{self.next_cabinet:04d}"

    def new_job_id(self) -> str:
        self.next_job += 1
        return f"job-{self.next_job:04d}"


def _work_loop(state: _State) -> None:
    while True:
        job_id = state.tasks.get()
        if job_id is None:
            return
        with state.lock:
            job = state.jobs[job_id]
            job.state = "running"
            config = job.config
            document = job.document
            warm_previous = job.warm_previous
        try:
            components = list(document.components)
            if warm_previous is not None:
                result = run_warm(config, components, document.cabinet, warm_previous)
            else:
                result = run(config, components, document.cabinet)
            payload = result_to_dict(result)
            payload["svg"] = render_svg(
                result.recommended.placement, components, result.recommended.objectives
            )
            with state.lock:
                job.result = payload
                job.state = "done"
        except Exception as err:  # a failed job must surface, not kill the worker
            with state.lock:
                job.error = str(err)
                job.state = "failed"


def create_app(worker_count: int = 2, snapshot_path: str | None = None) -> FastAPI:
    state = _State(worker_count=worker_count, snapshot_path=snapshot_path)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        for _ in range(state.worker_count):
            worker = threading.Thread(target=_work_loop, args=(state,), daemon=True)
            worker.start()
            state.workers.append(worker)
        yield
        for _ in state.workers:
            state.tasks.put(None)
        for worker in state.workers:
            worker.join(timeout=5.0)
        if state.snapshot_path:
            _write_snapshot(state)

    app = FastAPI(title="cabinet-psa", lifespan=lifespan)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, err: ApiError):
        return JSONResponse(status_code=err.status, content={"detail": err.detail})

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, err: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": str(err)})

    @app.post("/cabinets", status_code=201)
    async def create_cabinet(request: Request):
        body = await _json_body(request)
        try:
            document = document_from_dict(body)
        except ParseError as err:
            raise ApiError(400, str(err)) from err
        with state.lock:
            cabinet_id = state.new_cabinet_id()
            state.cabinets[cabinet_id] = [document]
        return {"cabinetId": cabinet_id}

    @app.post("/cabinets/{cabinet_id}/optimize", status_code=202)
    async def optimize_cabinet(cabinet_id: str, request: Request):
        body = await _json_body(request)
        config = config_from_overrides(body)
        warm_from = body.get("warmFrom")
        with state.lock:
            versions = state.cabinets.get(cabinet_id)
            if versions is None:
                raise ApiError(404, f"unknown cabinet {cabinet_id!r}")
            document = versions[-1]
            warm_previous = None
            if warm_from is not None:
                source = state.jobs.get(warm_from)
                if source is None:
                    raise ApiError(404, f"unknown job {warm_from!r}")
                if source.cabinet_id != cabinet_id:
                    raise ApiError(400, f"job {warm_from!r} belongs to another cabinet")
                if source.state != "done":
                    raise ApiError(400, f"job {warm_from!r} is {source.state}, not done")
                warm_previous = Layout(tuple(source.result["recommended"]["order"]))
            job_id = state.new_job_id()
            state.jobs[job_id] = Job(
                job_id=job_id,
                cabinet_id=cabinet_id,
                state="queued",
                config=config,
                document=document,
                warm_previous=warm_previous,
            )
        state.tasks.put(job_id)
        return {"jobId": job_id}

    @app.get("/jobs/{job_id}")
    async def get_job(job_id: str):
        with state.lock:
            job = state.jobs.get(job_id)
            if job is None:
                raise ApiError(404, f"unknown job {job_id!r}")
            return job.snapshot()

    @app.put("/cabinets/{cabinet_id}/components/{index}")
    async def edit_component(cabinet_id: str, index: int, request: Request):
        body = await _json_body(request)
        with state.lock:
            versions = state.cabinets.get(cabinet_id)
            if versions is None:
                raise ApiError(404, f"unknown cabinet {cabinet_id!r}")
            document = versions[-1]
            updated = _apply_edits(document, index, body)
            versions.append(updated)
            return document_to_dict(updated)

    return app


async def _json_body(request: Request) -> dict:
    raw = await request.body()
    if not raw:
        return {}
    try:
        body = json.loads(raw)
    except json.JSONDecodeError as err:
        raise ApiError(400, f"request body is not valid JSON: {err.msg}") from err
    if not isinstance(body, dict):
        raise ApiError(400, "request body must be a JSON object")
    return body


def _apply_edits(document: CabinetDocument, index: int, body: dict[str, Any]) -> CabinetDocument:
    target = next((c for c in document.components if c.index == index), None)
    if target is None:
        raise ApiError(404, f"unknown component index {index}")
    if not body:
        raise ApiError(400, "no fields to edit")
    edited = target
    for key, value in body.items():
        if key not in _EDITABLE_FIELDS:
            raise ApiError(400, f"field {key!r} is not editable")
        if key == "isHot":
            if isinstance(value, bool):
                edited = replace(edited, is_hot=value)
            elif value in (0, 1):
                edited = replace(edited, is_hot=bool(value))
            else:
                raise ApiError(400, f"isHot must be a boolean or 0/1, got {value!r}")
        elif key == "connectsTo":
            if not isinstance(value, list) or not all(
                isinstance(v, int) and not isinstance(v, bool) for v in value
            ):
                raise ApiError(400, "connectsTo must be a list of integers")
            edited = replace(edited, connects_to=tuple(value))
        else:
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ApiError(400, f"{key} must be a number")
            attr = {"widthMm": "width_mm", "heightMm": "height_mm", "depthMm": "depth_mm"}[key]
            edited = replace(edited, **{attr: float(value)})
    components = [edited if c.index == index else c for c in document.components]
    try:
        validate_components(components)
    except ComponentValidationError as err:
        raise ApiError(400, str(err)) from err
    return CabinetDocument(document.cabinet, tuple(components))


def _write_snapshot(state: _State) -> None:
    payload = {
        cabinet_id: [document_to_dict(doc) for doc in versions]
        for cabinet_id, versions in state.cabinets.items()
    }
    Path(state.snapshot_path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
