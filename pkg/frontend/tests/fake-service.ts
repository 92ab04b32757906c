// In-memory stand-in for the optimizer service, faithful to its endpoint
// contracts: versioned cabinets, job lifecycle with a queued->running->done
// progression across polls, warm starts referencing done jobs, and the same
// 400/404 shapes. Results are deterministic functions of (document version,
// config) so tests can assert exact pass-through.

import type { FetchLike } from "../src/api";
import type {
  ArchiveEntryPayload,
  CabinetDocument,
  ComponentEdit,
  JobSnapshot,
  ResultPayload,
} from "../src/types";

interface FakeJob {
  snapshot: JobSnapshot;
  pollsUntilDone: number;
  failWith: string | null;
}

export interface RecordedRequest {
  method: string;
  path: string;
  body: unknown;
}

const EDITABLE = new Set(["widthMm", "heightMm", "depthMm", "isHot", "connectsTo"]);

export class FakeService {
  cabinets = new Map<string, CabinetDocument[]>();
  jobs = new Map<string, FakeJob>();
  requests: RecordedRequest[] = [];
  pollsUntilDone = 2;
  failNextJobWith: string | null = null;
  private nextCabinet = 0;
  private nextJob = 0;

  fetch: FetchLike = async (url, init) => {
    const method = init?.method ?? "GET";
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    this.requests.push({ method, path, body });
    return this.route(method, path, body);
  };

  requestsTo(method: string, pattern: RegExp): RecordedRequest[] {
    return this.requests.filter((r) => r.method === method && pattern.test(r.path));
  }

  private route(method: string, path: string, body: unknown): Response {
    if (method === "POST" && path === "/cabinets") {
      const doc = body as CabinetDocument;
      if (!doc || !Array.isArray(doc.components) || doc.components.length === 0) {
        return json(400, { detail: "components missing" });
      }
      const id = `cab-${++this.nextCabinet}`;
      this.cabinets.set(id, [doc]);
      return json(201, { cabinetId: id });
    }

    let match = path.match(/^\/cabinets\/([^/]+)\/optimize$/);
    if (method === "POST" && match) {
      return this.startJob(match[1]!, (body ?? {}) as Record<string, unknown>);
    }

    match = path.match(/^\/jobs\/([^/]+)$/);
    if (method === "GET" && match) {
      const job = this.jobs.get(match[1]!);
      if (!job) {
        return json(404, { detail: `unknown job '${match[1]}'` });
      }
      this.advance(job);
      return json(200, job.snapshot);
    }

    match = path.match(/^\/cabinets\/([^/]+)\/components\/(\d+)$/);
    if (method === "PUT" && match) {
      return this.editComponent(match[1]!, Number(match[2]), body as ComponentEdit);
    }

    return json(404, { detail: `no route ${method} ${path}` });
  }

  private startJob(cabinetId: string, overrides: Record<string, unknown>): Response {
    const versions = this.cabinets.get(cabinetId);
    if (!versions) {
      return json(404, { detail: `unknown cabinet '${cabinetId}'` });
    }
    const warmFrom = overrides.warmFrom as string | undefined;
    if (warmFrom !== undefined) {
      const source = this.jobs.get(warmFrom);
      if (!source) {
        return json(404, { detail: `unknown job '${warmFrom}'` });
      }
      if (source.snapshot.state !== "done") {
        return json(400, { detail: `job '${warmFrom}' is not done` });
      }
    }
    if (typeof overrides.coolingRate === "number" && overrides.coolingRate >= 1) {
      return json(400, { detail: "coolingRate must be in (0, 1)" });
    }
    const jobId = `job-${++this.nextJob}`;
    const document = versions[versions.length - 1]!;
    const seed = typeof overrides.rngSeed === "number" ? overrides.rngSeed : 0;
    const job: FakeJob = {
      snapshot: {
        jobId,
        cabinetId,
        state: "queued",
        config: { rngSeed: seed },
        error: null,
        result: null,
      },
      pollsUntilDone: this.pollsUntilDone,
      failWith: this.failNextJobWith,
    };
    this.failNextJobWith = null;
    this.jobs.set(jobId, job);
    const version = versions.length;
    const warm = warmFrom !== undefined;
    job.snapshot.result = buildResult(document, seed, version, warm);
    return json(202, { jobId });
  }

  private advance(job: FakeJob): void {
    if (job.snapshot.state === "done" || job.snapshot.state === "failed") {
      return;
    }
    job.pollsUntilDone -= 1;
    if (job.pollsUntilDone > 0) {
      job.snapshot.state = "running";
      return;
    }
    if (job.failWith) {
      job.snapshot.state = "failed";
      job.snapshot.error = job.failWith;
      job.snapshot.result = null;
    } else {
      job.snapshot.state = "done";
    }
  }

  private editComponent(cabinetId: string, index: number, edit: ComponentEdit): Response {
    const versions = this.cabinets.get(cabinetId);
    if (!versions) {
      return json(404, { detail: `unknown cabinet '${cabinetId}'` });
    }
    const document = versions[versions.length - 1]!;
    const target = document.components.find((c) => c.index === index);
    if (!target) {
      return json(404, { detail: `unknown component index ${index}` });
    }
    for (const key of Object.keys(edit)) {
      if (!EDITABLE.has(key)) {
        return json(400, { detail: `field '${key}' is not editable` });
      }
    }
    if (edit.connectsTo?.some((t) => t < 1 || t > document.components.length)) {
      return json(400, { detail: "DanglingConnection" });
    }
    if (edit.widthMm !== undefined && edit.widthMm <= 0) {
      return json(400, { detail: "NonPositiveDimension" });
    }
    const updated: CabinetDocument = {
      ...document,
      components: document.components.map((c) =>
        c.index === index ? { ...c, ...edit } : c,
      ),
    };
    versions.push(updated);
    return json(200, updated);
  }
}

/** Deterministic pretend optimization: shelf-packs the identity order. */
export function buildResult(
  document: CabinetDocument,
  seed: number,
  version: number,
  warm: boolean,
): ResultPayload {
  const usable = document.cabinet.usableWidthMm;
  const gap = document.cabinet.rowGapMm;
  const placed = [];
  let x = 0;
  let top = 0;
  let rowHeight = 0;
  let row = 0;
  const rows: { yMm: number; heightMm: number }[] = [];
  for (const comp of document.components) {
    if (x + comp.widthMm > usable && x > 0) {
      rows.push({ yMm: top, heightMm: rowHeight });
      top += rowHeight + gap;
      x = 0;
      rowHeight = 0;
      row += 1;
    }
    placed.push({
      index: comp.index,
      xMm: x,
      yMm: top,
      row,
      widthMm: comp.widthMm,
      heightMm: comp.heightMm,
    });
    x += comp.widthMm;
    rowHeight = Math.max(rowHeight, comp.heightMm);
  }
  rows.push({ yMm: top, heightMm: rowHeight });

  const heat = 2.4 + seed * 0.001 + version * 0.01 + (warm ? 0.0001 : 0);
  const wireMm = 3800 - seed - version * 10 - (warm ? 100 : 0);
  const archive: ArchiveEntryPayload[] = [
    { heat, wireMm, order: document.components.map((c) => c.index) },
    { heat: heat + 1.9, wireMm: wireMm - 250, order: document.components.map((c) => c.index) },
    { heat: heat + 4.1, wireMm: wireMm - 400, order: document.components.map((c) => c.index) },
  ];
  return {
    formatVersion: 1,
    config: { rngSeed: seed },
    recommended: {
      order: document.components.map((c) => c.index),
      objectives: { heat, wireMm },
      placement: {
        usableWidthMm: usable,
        totalHeightMm: top + rowHeight,
        rows,
        components: placed,
      },
    },
    archive,
    initialMean: { heat: heat * 4, wireMm: wireMm * 2 },
    iterations: 1000 * version,
    fractionOfSpace: 1e-8,
    wallTimeSeconds: 0.5,
    svg: "<svg xmlns='http://www.w3.org/2000/svg'/>",
  };
}

export function sampleDocument(): CabinetDocument {
  const widths = [120, 160, 160, 176.5, 132.6, 149, 149, 149, 129.1, 120, 138, 138, 138, 111.6, 121.3];
  const heights = [150, 165, 165, 158, 165, 155, 155, 155, 165, 150.5, 152, 152, 152, 170, 150];
  const connects: number[][] = [
    [3], [1], [7], [5], [6], [15], [14], [1, 5], [10], [12], [10], [11], [12], [12, 15], [11, 6],
  ];
  const hot = new Set([1, 2, 5]);
  return {
    formatVersion: 1,
    cabinet: { usableWidthMm: 600, rowGapMm: 40, name: "sample-15" },
    components: widths.map((width, i) => ({
      index: i + 1,
      id: String(i + 1).padStart(4, "0"),
      widthMm: width,
      heightMm: heights[i]!,
      depthMm: 200,
      connectsTo: connects[i]!,
      isHot: hot.has(i + 1),
    })),
  };
}

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}
